use std::borrow::Cow;
use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Graph, Vertex};

/// Default byte budget for the full distance matrix (4 GiB).
pub const DEFAULT_MEMORY_CAP: u64 = 4 << 30;

const UNSEEN: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    /// `n x n` matrix of 16-bit hop counts.
    Full,
    /// One breadth-first search per query.
    OnDemand,
}

/// Unweighted shortest-path distances of a connected graph.
///
/// Both modes answer every query identically; the full matrix is chosen when
/// `2 n^2` bytes fit into the memory cap.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    n: usize,
    store: Store,
}

#[derive(Debug, Clone)]
enum Store {
    Full(Vec<u16>),
    OnDemand(Graph),
}

impl DistanceOracle {
    pub fn new(graph: &Graph, memory_cap: u64) -> Self {
        let n = graph.n() as u64;
        let bytes = n.saturating_mul(n).saturating_mul(2);
        if bytes <= memory_cap {
            if let Some(oracle) = Self::try_full(graph) {
                return oracle;
            }
            log::warn!("diameter does not fit 16-bit hop counts; using on-demand distances");
        } else {
            log::info!("distance matrix needs {bytes} bytes > cap {memory_cap}; using on-demand distances");
        }
        Self::on_demand(graph)
    }

    /// Full matrix regardless of the memory cap.
    ///
    /// # Panics
    /// If some distance does not fit into 16 bits.
    pub fn full(graph: &Graph) -> Self {
        Self::try_full(graph).expect("distance exceeds 16-bit range")
    }

    pub fn on_demand(graph: &Graph) -> Self {
        DistanceOracle {
            n: graph.n(),
            store: Store::OnDemand(graph.clone()),
        }
    }

    fn try_full(graph: &Graph) -> Option<Self> {
        let n = graph.n();
        let mut matrix = vec![UNSEEN; n * n];
        let ok = matrix
            .par_chunks_mut(n.max(1))
            .enumerate()
            .map_init(VecDeque::new, |queue, (source, row)| {
                bfs_row(graph, source, row, queue)
            })
            .all(|fits| fits);
        ok.then_some(DistanceOracle {
            n,
            store: Store::Full(matrix),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> DistanceMode {
        match self.store {
            Store::Full(_) => DistanceMode::Full,
            Store::OnDemand(_) => DistanceMode::OnDemand,
        }
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        match &self.store {
            Store::Full(m) => m[u * self.n + v] as usize,
            Store::OnDemand(g) => pair_distance(g, u, v),
        }
    }

    /// Distances from `u` to every vertex.
    pub fn row(&self, u: Vertex) -> Cow<'_, [u16]> {
        match &self.store {
            Store::Full(m) => Cow::Borrowed(&m[u * self.n..(u + 1) * self.n]),
            Store::OnDemand(g) => {
                let mut row = vec![UNSEEN; self.n];
                bfs_row(g, u, &mut row, &mut VecDeque::new());
                Cow::Owned(row)
            }
        }
    }

    /// `N_r[v]`: every vertex within `r` hops of `v`, ascending.
    pub fn closed_neighborhood(&self, v: Vertex, r: usize) -> Vec<Vertex> {
        match &self.store {
            Store::Full(_) => {
                let row = self.row(v);
                (0..self.n).filter(|&u| (row[u] as usize) <= r).collect()
            }
            Store::OnDemand(g) => {
                let mut seen = vec![false; self.n];
                let mut out = vec![v];
                seen[v] = true;
                let mut frontier = vec![v];
                for _ in 0..r {
                    let mut next = Vec::new();
                    for &u in &frontier {
                        for &w in g.neighbors(u) {
                            if !seen[w] {
                                seen[w] = true;
                                next.push(w);
                            }
                        }
                    }
                    if next.is_empty() {
                        break;
                    }
                    out.extend_from_slice(&next);
                    frontier = next;
                }
                out.sort_unstable();
                out
            }
        }
    }

    pub fn eccentricity(&self, v: Vertex) -> usize {
        self.row(v).iter().copied().max().unwrap_or(0) as usize
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }
}

/// Fills `row` with hop counts from `source`; false if a distance overflows.
fn bfs_row(graph: &Graph, source: Vertex, row: &mut [u16], queue: &mut VecDeque<Vertex>) -> bool {
    queue.clear();
    row[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        if next == UNSEEN {
            return false;
        }
        for &w in graph.neighbors(u) {
            if row[w] == UNSEEN {
                row[w] = next;
                queue.push_back(w);
            }
        }
    }
    true
}

fn pair_distance(graph: &Graph, u: Vertex, v: Vertex) -> usize {
    if u == v {
        return 0;
    }
    let mut dist = vec![usize::MAX; graph.n()];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(x) = queue.pop_front() {
        for &w in graph.neighbors(x) {
            if dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                if w == v {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    unreachable!("graph is connected")
}
