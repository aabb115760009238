//! Clustered maximum coverage: pick one subset from each cluster so that the
//! union is as large as possible.
//!
//! Instances are either explicit (lists of element subsets) or derived from a
//! graph, where cluster `k` holds the radius-`r_k` closed neighborhood of
//! every vertex and subsets are resolved through the distance oracle.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::burning::BurningSequence;
use crate::error::{Error, Result};
use crate::graph::DistanceOracle;
use crate::ties::{TieBreak, Ties};

/// Default cap on the number of combinations `exact_cmcp` may enumerate.
pub const DEFAULT_MAX_COMBINATIONS: u128 = 100_000_000;

#[derive(Debug, Clone)]
pub struct CmcpInstance<'a> {
    universe_size: usize,
    clusters: Clusters<'a>,
}

#[derive(Debug, Clone)]
enum Clusters<'a> {
    Explicit(Vec<Vec<Vec<usize>>>),
    /// Cluster `k` = `{ N_{radii[k]}[v] : v in V }`, subset index = center.
    Neighborhoods {
        oracle: &'a DistanceOracle,
        radii: Vec<usize>,
    },
}

/// Where a selection's subsets come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Explicit,
    /// Neighborhood clusters with the given radius per cluster.
    Neighborhoods { radii: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    /// `chosen[k]` indexes into cluster `k`.
    pub chosen: Vec<usize>,
    /// Sorted union of the chosen subsets.
    pub covered: Vec<usize>,
    pub covered_count: usize,
    /// Newly covered elements per greedy pick, in pick order (empty for exact).
    pub gains: Vec<usize>,
    /// Complete combinations evaluated (exact search only).
    pub combinations: u64,
    pub origin: Origin,
}

impl CmcpInstance<'static> {
    /// Explicit instance. Element ids must be below `universe_size`; every
    /// cluster needs at least one subset. Duplicate elements are merged.
    pub fn new(universe_size: usize, mut clusters: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if clusters.is_empty() {
            return Err(Error::InvalidArgument("instance needs at least one cluster".into()));
        }
        for (k, cluster) in clusters.iter_mut().enumerate() {
            if cluster.is_empty() {
                return Err(Error::InvalidArgument(format!("cluster {k} is empty")));
            }
            for subset in cluster.iter_mut() {
                if let Some(&e) = subset.iter().find(|&&e| e >= universe_size) {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} outside universe of size {universe_size}"
                    )));
                }
                subset.sort_unstable();
                subset.dedup();
            }
        }
        Ok(CmcpInstance {
            universe_size,
            clusters: Clusters::Explicit(clusters),
        })
    }

    /// Reads the text format: `universe_size p`, then for each cluster a line
    /// with its subset count followed by one line of element ids per subset.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::Empty("instance has no header".into()))?;
        let head = parse_ints(header, 1)?;
        let [universe_size, p] = head[..] else {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be `universe_size p`".into(),
            });
        };
        let mut clusters = Vec::with_capacity(p.min(1024));
        for k in 0..p {
            let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing subset count for cluster {k}"),
            })?;
            let count = parse_ints(line, lineno)?;
            let [count] = count[..] else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected a single subset count".into(),
                });
            };
            let mut cluster = Vec::with_capacity(count.min(1024));
            for _ in 0..count {
                let (lineno, line) = lines.next().ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("cluster {k} ends early"),
                })?;
                cluster.push(parse_ints(line, lineno)?);
            }
            clusters.push(cluster);
        }
        if let Some((lineno, _)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(Error::Parse {
                line: lineno,
                msg: "trailing content after last cluster".into(),
            });
        }
        CmcpInstance::new(universe_size, clusters)
    }
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("{t:?} is not a nonnegative integer"),
            })
        })
        .collect()
}

/// Reduction from burning with guess `p`: cluster `k` (`k = 0..p`) holds
/// `N_k[v]` for every vertex `v`.
pub fn gbp_to_cmcp(oracle: &DistanceOracle, p: usize) -> Result<CmcpInstance<'_>> {
    if p == 0 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    Ok(CmcpInstance {
        universe_size: oracle.n(),
        clusters: Clusters::Neighborhoods {
            oracle,
            radii: (0..p).collect(),
        },
    })
}

impl<'a> CmcpInstance<'a> {
    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn num_clusters(&self) -> usize {
        match &self.clusters {
            Clusters::Explicit(c) => c.len(),
            Clusters::Neighborhoods { radii, .. } => radii.len(),
        }
    }

    pub fn cluster_len(&self, k: usize) -> usize {
        match &self.clusters {
            Clusters::Explicit(c) => c[k].len(),
            Clusters::Neighborhoods { oracle, .. } => oracle.n(),
        }
    }

    /// Sorted elements of subset `j` of cluster `k`.
    pub fn subset(&self, k: usize, j: usize) -> Vec<usize> {
        match &self.clusters {
            Clusters::Explicit(c) => c[k][j].clone(),
            Clusters::Neighborhoods { oracle, radii } => oracle.closed_neighborhood(j, radii[k]),
        }
    }

    pub fn origin(&self) -> Origin {
        match &self.clusters {
            Clusters::Explicit(_) => Origin::Explicit,
            Clusters::Neighborhoods { radii, .. } => Origin::Neighborhoods {
                radii: radii.clone(),
            },
        }
    }

    /// Same instance with the cluster order reversed.
    pub fn reversed(&self) -> CmcpInstance<'a> {
        let clusters = match &self.clusters {
            Clusters::Explicit(c) => Clusters::Explicit(c.iter().rev().cloned().collect()),
            Clusters::Neighborhoods { oracle, radii } => Clusters::Neighborhoods {
                oracle,
                radii: radii.iter().rev().copied().collect(),
            },
        };
        CmcpInstance {
            universe_size: self.universe_size,
            clusters,
        }
    }

    /// Product of the cluster sizes, saturating.
    pub fn combinations(&self) -> u128 {
        (0..self.num_clusters()).fold(1u128, |acc, k| acc.saturating_mul(self.cluster_len(k) as u128))
    }

    /// Text form readable by [`CmcpInstance::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.universe_size, self.num_clusters());
        for k in 0..self.num_clusters() {
            let _ = writeln!(out, "{}", self.cluster_len(k));
            for j in 0..self.cluster_len(k) {
                let elems: Vec<String> = self.subset(k, j).iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}", elems.join(" "));
            }
        }
        out
    }

    fn materialize(&self) -> Packed {
        let words = self.universe_size.div_ceil(64).max(1);
        let mut offsets = Vec::with_capacity(self.num_clusters() + 1);
        offsets.push(0);
        for k in 0..self.num_clusters() {
            offsets.push(offsets[k] + self.cluster_len(k));
        }
        let mut bits = vec![0u64; offsets[self.num_clusters()] * words];
        for (k, &offset) in offsets[..self.num_clusters()].iter().enumerate() {
            for j in 0..self.cluster_len(k) {
                let base = (offset + j) * words;
                for e in self.subset(k, j) {
                    bits[base + e / 64] |= 1 << (e % 64);
                }
            }
        }
        Packed {
            words,
            offsets,
            bits,
        }
    }

    fn selection(&self, chosen: Vec<usize>, gains: Vec<usize>, combinations: u64) -> Selection {
        let mut covered: Vec<usize> = chosen
            .iter()
            .enumerate()
            .flat_map(|(k, &j)| self.subset(k, j))
            .collect();
        covered.sort_unstable();
        covered.dedup();
        Selection {
            chosen,
            covered_count: covered.len(),
            covered,
            gains,
            combinations,
            origin: self.origin(),
        }
    }
}

/// All subsets as bit rows, cluster-major.
struct Packed {
    words: usize,
    offsets: Vec<usize>,
    bits: Vec<u64>,
}

impl Packed {
    fn row(&self, k: usize, j: usize) -> &[u64] {
        let start = (self.offsets[k] + j) * self.words;
        &self.bits[start..start + self.words]
    }
}

fn count_new(subset: &[u64], covered: &[u64]) -> usize {
    subset
        .iter()
        .zip(covered)
        .map(|(s, c)| (s & !c).count_ones() as usize)
        .sum()
}

/// Greedy 1/2-approximation: repeatedly take the (cluster, subset) pair
/// covering the most uncovered elements among the clusters not yet used.
///
/// Ties are resolved over the flattened subset id
/// (`sum of earlier cluster sizes + subset index`), so the default policy
/// prefers the lowest cluster, then the lowest subset.
pub fn greedy_cmcp(instance: &CmcpInstance<'_>, tie: &TieBreak) -> Selection {
    let packed = instance.materialize();
    let p = instance.num_clusters();
    let mut ties = Ties::new(tie);
    let mut covered = vec![0u64; packed.words];
    let mut remaining = vec![true; p];
    let mut chosen = vec![usize::MAX; p];
    let mut gains = Vec::with_capacity(p);
    let mut candidates = Vec::new();
    for _ in 0..p {
        let mut best = 0;
        candidates.clear();
        for k in (0..p).filter(|&k| remaining[k]) {
            for j in 0..instance.cluster_len(k) {
                let gain = count_new(packed.row(k, j), &covered);
                if gain > best || candidates.is_empty() {
                    best = gain;
                    candidates.clear();
                }
                if gain == best {
                    candidates.push(packed.offsets[k] + j);
                }
            }
        }
        let flat = ties.pick(&candidates);
        let k = packed.offsets.partition_point(|&o| o <= flat) - 1;
        let j = flat - packed.offsets[k];
        for (c, s) in covered.iter_mut().zip(packed.row(k, j)) {
            *c |= s;
        }
        remaining[k] = false;
        chosen[k] = j;
        gains.push(best);
    }
    instance.selection(chosen, gains, 0)
}

/// Maximum coverage by exhaustive enumeration of the cluster product.
///
/// Among optimal selections the lexicographically smallest index vector is
/// returned. Fails when the product of cluster sizes exceeds
/// `max_combinations`.
pub fn exact_cmcp(instance: &CmcpInstance<'_>, max_combinations: u128) -> Result<Selection> {
    let needed = instance.combinations();
    if needed > max_combinations {
        return Err(Error::BudgetExceeded {
            needed,
            budget: max_combinations,
        });
    }
    let packed = instance.materialize();
    let p = instance.num_clusters();
    let full = instance.universe_size;
    let first_full = AtomicUsize::new(usize::MAX);

    let results: Vec<(usize, Vec<usize>, u64)> = (0..instance.cluster_len(0))
        .into_par_iter()
        .map(|j0| {
            let mut search = Subtree {
                packed: &packed,
                p,
                full,
                prefix: vec![0u64; (p + 1) * packed.words],
                path: vec![0; p],
                best: (0, Vec::new()),
                leaves: 0,
                root: j0,
                first_full: &first_full,
                stopped: false,
            };
            search.path[0] = j0;
            let (head, tail) = search.prefix.split_at_mut(packed.words);
            for ((dst, src), base) in tail[..packed.words].iter_mut().zip(packed.row(0, j0)).zip(head.iter()) {
                *dst = base | src;
            }
            search.descend(1);
            if search.best.0 == full && !search.stopped {
                first_full.fetch_min(j0, Ordering::Relaxed);
            }
            (search.best.0, search.best.1, search.leaves)
        })
        .collect();

    let combinations = results.iter().map(|r| r.2).sum();
    let (_, chosen, _) = results
        .into_iter()
        .filter(|r| !r.1.is_empty())
        .fold((0usize, Vec::new(), 0u64), |acc, r| {
            if acc.1.is_empty() || r.0 > acc.0 {
                r
            } else {
                acc
            }
        });
    Ok(instance.selection(chosen, Vec::new(), combinations))
}

struct Subtree<'p> {
    packed: &'p Packed,
    p: usize,
    full: usize,
    /// `prefix[d]` = union of the subsets chosen in clusters `0..d`.
    prefix: Vec<u64>,
    path: Vec<usize>,
    best: (usize, Vec<usize>),
    leaves: u64,
    root: usize,
    first_full: &'p AtomicUsize,
    stopped: bool,
}

impl Subtree<'_> {
    /// Returns true once the search can stop (full coverage reached or an
    /// earlier subtree already reached it).
    fn descend(&mut self, depth: usize) -> bool {
        let w = self.packed.words;
        if depth == self.p {
            self.leaves += 1;
            let count: usize = self.prefix[depth * w..(depth + 1) * w]
                .iter()
                .map(|x| x.count_ones() as usize)
                .sum();
            if self.best.1.is_empty() || count > self.best.0 {
                self.best = (count, self.path.clone());
            }
            if count == self.full {
                return true;
            }
            if self.leaves.is_multiple_of(4096) && self.first_full.load(Ordering::Relaxed) < self.root {
                self.stopped = true;
                return true;
            }
            return false;
        }
        for j in 0..self.packed.offsets[depth + 1] - self.packed.offsets[depth] {
            self.path[depth] = j;
            let (head, tail) = self.prefix.split_at_mut(w * (depth + 1));
            let src = &head[w * depth..];
            for ((dst, a), b) in tail[..w].iter_mut().zip(src).zip(self.packed.row(depth, j)) {
                *dst = a | b;
            }
            if self.descend(depth + 1) {
                return true;
            }
        }
        false
    }
}

/// Turns a selection on a neighborhood instance into a burning sequence:
/// the center picked from the radius-`r` cluster becomes `u_{p-r}`.
pub fn selection_to_sequence(selection: &Selection, p: usize) -> Result<BurningSequence> {
    let Origin::Neighborhoods { radii } = &selection.origin else {
        return Err(Error::NotGbpSelection(p));
    };
    let mut sorted = radii.clone();
    sorted.sort_unstable();
    if sorted != (0..p).collect::<Vec<_>>() || selection.chosen.len() != p {
        return Err(Error::NotGbpSelection(p));
    }
    let mut seq = vec![0; p];
    for (k, &center) in selection.chosen.iter().enumerate() {
        seq[p - 1 - radii[k]] = center;
    }
    Ok(BurningSequence::new(seq))
}
