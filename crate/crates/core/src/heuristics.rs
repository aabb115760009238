//! Burning heuristics: farthest-first (BFF), the greedy coverage heuristic
//! (Gr), its restarted variant (GrP) and the binary search over the guess `p`.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::burning::BurningSequence;
use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph, Vertex};
use crate::ties::{TieBreak, Ties};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Bff,
    Gr,
    Grp,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Bff => "bff",
            Strategy::Gr => "gr",
            Strategy::Grp => "grp",
        })
    }
}

/// One solver call at a fixed guess `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct Probe {
    pub p: usize,
    pub burned_all: bool,
    pub covered_count: usize,
    pub elapsed: Duration,
}

/// Bounds derived from the farthest-first run that seeds the binary search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchBounds {
    pub lower: usize,
    pub upper: usize,
    pub bff_len: usize,
    pub bff_time: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub sequence: BurningSequence,
    pub burned_all: bool,
    pub covered_count: usize,
    pub per_guess_log: Vec<Probe>,
    /// Solver that produced `sequence`.
    pub strategy: Strategy,
    /// Set by the binary search driver.
    pub bounds: Option<SearchBounds>,
}

/// Burning farthest-first.
///
/// Fire spreads one hop per round from a FIFO frontier; after each round the
/// vertex farthest from every sequence vertex so far (lowest id on ties) is
/// appended. Yields a burning sequence of length at most `3 b(G) - 2`.
pub fn bff(graph: &Graph, oracle: &DistanceOracle, start: Vertex) -> Result<BurningSequence> {
    graph.check_vertex(start)?;
    let n = graph.n();
    let mut seq = vec![start];
    let mut burned = vec![false; n];
    burned[start] = true;
    let mut burned_count = 1;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut dist: Vec<u16> = oracle.row(start).into_owned();
    while burned_count < n {
        for _ in 0..queue.len() {
            let v = queue.pop_front().unwrap();
            for &u in graph.neighbors(v) {
                if !burned[u] {
                    burned[u] = true;
                    burned_count += 1;
                    queue.push_back(u);
                }
            }
        }
        let (mut far, mut far_d) = (0, 0);
        for (u, &d) in dist.iter().enumerate() {
            if d > far_d {
                far = u;
                far_d = d;
            }
        }
        seq.push(far);
        queue.push_back(far);
        if !burned[far] {
            burned[far] = true;
            burned_count += 1;
        }
        let row = oracle.row(far);
        for (d, &e) in dist.iter_mut().zip(row.iter()) {
            *d = (*d).min(e);
        }
    }
    Ok(BurningSequence::new(seq))
}

/// Greedy burning for a fixed guess `p`.
///
/// For `r = p-1` down to `0` it picks the vertex whose `N_r` ball holds the
/// most still-uncovered vertices and marks that ball covered. `first`, when
/// given, replaces the pick at `r = p-1`.
///
/// Per-vertex gains are kept as counters: shrinking the radius subtracts the
/// uncovered vertices on the outer shell, covering a vertex decrements every
/// ball that contains it. Each run is `O(p n^2)` with the full matrix.
pub fn gr(
    graph: &Graph,
    oracle: &DistanceOracle,
    p: usize,
    first: Option<Vertex>,
    tie: &TieBreak,
) -> Result<SolveReport> {
    let started = Instant::now();
    if p == 0 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    if let Some(v) = first {
        graph.check_vertex(v)?;
    }
    let n = graph.n();
    let mut ties = Ties::new(tie);
    let mut uncovered = vec![true; n];
    let mut remaining = n;
    let mut used = vec![false; n];
    let top = (p - 1).min(u16::MAX as usize - 1) as u16;

    let mut gain: Vec<usize> = (0..n)
        .map(|u| oracle.row(u).iter().filter(|&&d| d <= top).count())
        .collect();

    let mut seq = Vec::with_capacity(p);
    let mut candidates = Vec::new();
    for step in 0..p {
        let r = p - 1 - step;
        if step > 0 && r < top as usize && remaining > 0 {
            let shell = (r + 1) as u16;
            for (u, g) in gain.iter_mut().enumerate() {
                if *g == 0 {
                    continue;
                }
                let row = oracle.row(u);
                let lost = row
                    .iter()
                    .zip(&uncovered)
                    .filter(|&(&d, &unc)| unc && d == shell)
                    .count();
                *g -= lost;
            }
        }

        let v = match (step, first) {
            (0, Some(v)) => v,
            _ => {
                let any_unused = used.iter().any(|&x| !x);
                let mut best = 0;
                candidates.clear();
                for u in 0..n {
                    if any_unused && used[u] {
                        continue;
                    }
                    if gain[u] > best || candidates.is_empty() {
                        best = gain[u];
                        candidates.clear();
                    }
                    if gain[u] == best {
                        candidates.push(u);
                    }
                }
                ties.pick(&candidates)
            }
        };
        seq.push(v);
        used[v] = true;

        let radius = r.min(top as usize) as u16;
        let ball: Vec<Vertex> = {
            let row = oracle.row(v);
            (0..n).filter(|&w| uncovered[w] && row[w] <= radius).collect()
        };
        for w in ball {
            uncovered[w] = false;
            remaining -= 1;
            let row = oracle.row(w);
            for (g, &d) in gain.iter_mut().zip(row.iter()) {
                if d <= radius {
                    *g -= 1;
                }
            }
        }
    }
    let covered_count = n - remaining;
    let burned_all = remaining == 0;
    Ok(SolveReport {
        sequence: BurningSequence::new(seq),
        burned_all,
        covered_count,
        per_guess_log: vec![Probe {
            p,
            burned_all,
            covered_count,
            elapsed: started.elapsed(),
        }],
        strategy: Strategy::Gr,
        bounds: None,
    })
}

/// Greedy burning restarted from every first vertex in ascending id order.
///
/// Returns the first run that burns every vertex, otherwise the run covering
/// the most (lowest first vertex on ties).
pub fn grp(graph: &Graph, oracle: &DistanceOracle, p: usize, tie: &TieBreak) -> Result<SolveReport> {
    grp_until(graph, oracle, p, tie, None)
}

/// [`grp`] with an optional wall-clock deadline checked between batches of
/// restarts. Batches run in parallel; the result matches the sequential scan.
pub fn grp_until(
    graph: &Graph,
    oracle: &DistanceOracle,
    p: usize,
    tie: &TieBreak,
    deadline: Option<Instant>,
) -> Result<SolveReport> {
    let started = Instant::now();
    let n = graph.n();
    let batch = (rayon::current_num_threads() * 4).max(8);
    let mut best: Option<SolveReport> = None;
    let mut lo = 0;
    while lo < n {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::TimeLimit);
        }
        let hi = (lo + batch).min(n);
        let runs: Vec<Result<SolveReport>> = (lo..hi)
            .into_par_iter()
            .map(|v| gr(graph, oracle, p, Some(v), tie))
            .collect();
        for run in runs {
            let run = run?;
            if run.burned_all {
                return Ok(finish_grp(run, p, started));
            }
            if best.as_ref().is_none_or(|b| run.covered_count > b.covered_count) {
                best = Some(run);
            }
        }
        lo = hi;
    }
    Ok(finish_grp(best.expect("graph has at least one vertex"), p, started))
}

fn finish_grp(mut run: SolveReport, p: usize, started: Instant) -> SolveReport {
    run.strategy = Strategy::Grp;
    run.per_guess_log = vec![Probe {
        p,
        burned_all: run.burned_all,
        covered_count: run.covered_count,
        elapsed: started.elapsed(),
    }];
    run
}

/// Binary search over the guess `p` between farthest-first bounds.
///
/// With `s0` the farthest-first length (started at vertex 0, the smallest
/// label), `p` ranges over `ceil((s0 + 2) / 3) ..= s0 - 1`. A probe that burns
/// everything lowers the upper end, any other raises the lower end. The
/// shortest burning sequence seen is returned, which is the farthest-first
/// one when no probe succeeds.
pub fn binary_search_solve(
    graph: &Graph,
    oracle: &DistanceOracle,
    strategy: Strategy,
    tie: &TieBreak,
) -> Result<SolveReport> {
    binary_search_until(graph, oracle, strategy, tie, None)
}

pub fn binary_search_until(
    graph: &Graph,
    oracle: &DistanceOracle,
    strategy: Strategy,
    tie: &TieBreak,
    deadline: Option<Instant>,
) -> Result<SolveReport> {
    let t0 = Instant::now();
    let s0 = bff(graph, oracle, 0)?;
    let bff_time = t0.elapsed();
    let (mut lower, mut upper) = bff_bounds(s0.len());
    let bounds = SearchBounds {
        lower,
        upper,
        bff_len: s0.len(),
        bff_time,
    };
    let mut best = s0;
    let mut best_strategy = Strategy::Bff;
    let mut log = Vec::new();
    while lower <= upper {
        let p = (lower + upper) / 2;
        let report = match strategy {
            Strategy::Gr => {
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    return Err(Error::TimeLimit);
                }
                gr(graph, oracle, p, None, tie)?
            }
            Strategy::Grp => grp_until(graph, oracle, p, tie, deadline)?,
            Strategy::Bff => {
                return Err(Error::InvalidArgument(
                    "binary search needs the gr or grp strategy".into(),
                ))
            }
        };
        log.extend(report.per_guess_log.iter().cloned());
        if report.burned_all {
            if report.sequence.len() < best.len() {
                best = report.sequence;
                best_strategy = strategy;
            }
            upper = p - 1;
        } else {
            lower = p + 1;
        }
    }
    Ok(SolveReport {
        sequence: best,
        burned_all: true,
        covered_count: graph.n(),
        per_guess_log: log,
        strategy: best_strategy,
        bounds: Some(bounds),
    })
}

/// `(ceil((s0 + 2) / 3), s0 - 1)`.
pub fn bff_bounds(s0: usize) -> (usize, usize) {
    ((s0 + 2).div_ceil(3), s0.saturating_sub(1))
}

/// Certificate that a guess is below the burning number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBound {
    /// The guess; the burning number is strictly larger.
    pub p: usize,
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} < b(G)", self.p)
    }
}

/// Half-coverage test for a plain greedy run: if it covered fewer than `n / 2`
/// vertices, no burning sequence of that length exists. Runs with a forced
/// first vertex are not greedy and must not be passed here.
pub fn half_coverage_test(report: &SolveReport, n: usize) -> Option<LowerBound> {
    (2 * report.covered_count < n).then(|| LowerBound {
        p: report.sequence.len(),
    })
}
