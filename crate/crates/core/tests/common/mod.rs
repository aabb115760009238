//! Independent reference implementations shared by the integration suites.
//! None of these call into the solver code beyond building graphs.
#![allow(dead_code)]

use gburn::graph::{parse_edge_list, EdgeListOptions};
use gburn::Graph;
use proptest::prelude::*;
use proptest::sample::Index;
use rand::Rng;

pub const UNREACHABLE: usize = usize::MAX / 4;

/// All-pairs hop distances by Floyd-Warshall over the edge list.
pub fn floyd(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in graph.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Definition check: every vertex within `p - i` of some `u_i` (1-based i).
pub fn burns(dist: &[Vec<usize>], seq: &[usize]) -> bool {
    let p = seq.len();
    (0..dist.len()).all(|v| seq.iter().enumerate().any(|(i, &u)| dist[v][u] + i < p))
}

/// Smallest `p` for which some length-`p` vertex sequence burns the graph,
/// by enumerating all sequences of distinct vertices.
pub fn brute_burning_number(dist: &[Vec<usize>]) -> usize {
    let n = dist.len();
    for p in 1..=n {
        let mut seq = Vec::with_capacity(p);
        if search(dist, p, &mut seq) {
            return p;
        }
    }
    unreachable!("the sequence of all vertices burns a connected graph")
}

fn search(dist: &[Vec<usize>], p: usize, seq: &mut Vec<usize>) -> bool {
    if seq.len() == p {
        return burns(dist, seq);
    }
    for v in 0..dist.len() {
        if seq.contains(&v) {
            continue;
        }
        seq.push(v);
        if search(dist, p, seq) {
            return true;
        }
        seq.pop();
    }
    false
}

/// Best union size over every choice of one subset per cluster.
pub fn brute_cmcp(clusters: &[Vec<Vec<usize>>]) -> usize {
    fn go(clusters: &[Vec<Vec<usize>>], k: usize, covered: &mut Vec<u32>) -> usize {
        if k == clusters.len() {
            return covered.iter().filter(|&&c| c > 0).count();
        }
        let mut best = 0;
        for subset in &clusters[k] {
            for &e in subset {
                covered[e] += 1;
            }
            best = best.max(go(clusters, k + 1, covered));
            for &e in subset {
                covered[e] -= 1;
            }
        }
        best
    }
    let universe = clusters.iter().flatten().flatten().max().map_or(0, |m| m + 1);
    go(clusters, 0, &mut vec![0; universe])
}

/// Edges of a connected graph: a random tree plus extra random pairs.
pub fn connected_edges(n: usize, parents: &[Index], extra: &[(Index, Index)]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v].index(v), v)).collect();
    if n > 1 {
        edges.extend(
            extra
                .iter()
                .map(|(a, b)| (a.index(n), b.index(n)))
                .filter(|(a, b)| a != b),
        );
    }
    edges
}

/// Connected graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<Index>(), n),
                prop::collection::vec((any::<Index>(), any::<Index>()), 0..=2 * n),
            )
        })
        .prop_map(|(n, parents, extra)| Graph::from_edges(n, &connected_edges(n, &parents, &extra)).unwrap())
}

/// Same construction driven by a plain RNG, for fixed-count loops.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn fixture(name: &str) -> Graph {
    let path = format!("{}/tests/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_edge_list(&text, &EdgeListOptions::default()).unwrap().graph
}
