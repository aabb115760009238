//! Simple undirected connected graphs with contiguous 0-based vertex ids.
//!
//! External labels read from an edge list are kept in a side table so that
//! results can be reported in the input's own numbering.

mod distance;
mod generate;
mod parse;

pub use distance::{DistanceMode, DistanceOracle, DEFAULT_MEMORY_CAP};
pub use generate::{generate, GraphKind};
pub use parse::{parse_edge_list, parse_fixture, EdgeListOptions, Indexing, ParseReport};

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Vertex id, always in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
    labels: Option<Vec<i64>>,
}

impl Graph {
    /// Builds a connected graph from an edge list over `0..n`.
    ///
    /// Self-loops and repeated edges are dropped. Fails if an endpoint is out
    /// of range, `n == 0`, or the result is disconnected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let g = Self::build(n, edges)?.0;
        g.require_connected()?;
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but also returns how many self-loops and
    /// duplicate edges were dropped, and skips the connectivity check.
    pub(crate) fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<(Self, usize, usize)> {
        if n == 0 {
            return Err(Error::Empty("graph has no vertices".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut loops = 0;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                loops += 1;
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut half_degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            half_degree_sum += list.len();
        }
        let m = half_degree_sum / 2;
        let duplicates = edges.len() - loops - m;
        Ok((
            Graph {
                adjacency,
                m,
                labels: None,
            },
            loops,
            duplicates,
        ))
    }

    pub(crate) fn with_labels(mut self, labels: Vec<i64>) -> Self {
        debug_assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Original labels from the input file, if the graph was parsed.
    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    /// External label of `v`; falls back to the id itself.
    pub fn label(&self, v: Vertex) -> i64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as i64,
        }
    }

    /// Maps an external label back to a vertex id.
    pub fn vertex_by_label(&self, label: i64) -> Option<Vertex> {
        match &self.labels {
            // labels are assigned in ascending order during parsing
            Some(l) => l.binary_search(&label).ok(),
            None => usize::try_from(label).ok().filter(|&v| v < self.n()),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Component id per vertex and the number of components.
    pub(crate) fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let (_, components) = self.components();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components })
        }
    }

    /// Induced subgraph on the largest connected component (lowest component
    /// index wins ties). Vertex ids are re-packed preserving relative order,
    /// labels follow their vertices.
    pub fn largest_component(&self) -> Graph {
        let (comp, count) = self.components();
        if count <= 1 {
            return self.clone();
        }
        let mut sizes = vec![0usize; count];
        for &c in &comp {
            sizes[c] += 1;
        }
        let best = (0..count).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))).unwrap();
        let mut new_id = vec![usize::MAX; self.n()];
        let mut kept = Vec::with_capacity(sizes[best]);
        for v in 0..self.n() {
            if comp[v] == best {
                new_id[v] = kept.len();
                kept.push(v);
            }
        }
        let adjacency: Vec<Vec<Vertex>> = kept
            .iter()
            .map(|&v| self.adjacency[v].iter().map(|&w| new_id[w]).collect())
            .collect();
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let labels = self
            .labels
            .as_ref()
            .map(|l| kept.iter().map(|&v| l[v]).collect());
        Graph { adjacency, m, labels }
    }

    /// Fixture serialization: a header `n m`, then one `u v` line per edge
    /// with `u < v`, lexicographically sorted.
    pub fn to_fixture(&self) -> String {
        let mut out = String::with_capacity(16 + self.m * 12);
        let _ = writeln!(out, "{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}
