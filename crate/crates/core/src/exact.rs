//! Exact burning number: binary search on `p` where each guess is decided by
//! an exact clustered-coverage solve of the neighborhood reduction.

use crate::burning::{is_burning_sequence, BurningSequence};
use crate::cmcp::{exact_cmcp, gbp_to_cmcp, selection_to_sequence, DEFAULT_MAX_COMBINATIONS};
use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph};
use crate::heuristics::{bff, bff_bounds, grp};
use crate::ties::TieBreak;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactBudget {
    pub max_combinations: u128,
}

impl Default for ExactBudget {
    fn default() -> Self {
        ExactBudget {
            max_combinations: DEFAULT_MAX_COMBINATIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub burning_number: usize,
    pub sequence: BurningSequence,
    /// `(p, best coverage)` for every guess decided during the search.
    pub probes: Vec<(usize, usize)>,
    /// Combinations enumerated across all exhaustive solves.
    pub budget_spent: u64,
}

/// Computes `b(G)` and an optimal burning sequence.
///
/// The search range starts from the farthest-first bounds. A guess is
/// settled as feasible as soon as the restarted greedy heuristic produces a
/// validated burning sequence of that length; otherwise the exhaustive
/// coverage solve decides it. Only infeasible guesses therefore need the full
/// enumeration.
pub fn exact_solve(graph: &Graph, oracle: &DistanceOracle, budget: ExactBudget) -> Result<ExactResult> {
    let n = graph.n();
    let mut best = bff(graph, oracle, 0)?;
    let (mut lower, mut upper) = bff_bounds(best.len());
    let mut probes = Vec::new();
    let mut spent = 0u64;
    while lower <= upper {
        let p = (lower + upper) / 2;
        let witness = grp(graph, oracle, p, &TieBreak::SmallestIndex)?;
        let found = if witness.burned_all {
            probes.push((p, n));
            Some(witness.sequence)
        } else {
            let instance = gbp_to_cmcp(oracle, p)?;
            let selection = exact_cmcp(&instance, budget.max_combinations).map_err(|e| match e {
                Error::BudgetExceeded { .. } => Error::ExactBudget {
                    probe: p,
                    lower,
                    upper: best.len(),
                },
                other => other,
            })?;
            spent += selection.combinations;
            probes.push((p, selection.covered_count));
            (selection.covered_count == n).then(|| selection_to_sequence(&selection, p)).transpose()?
        };
        match found {
            Some(seq) => {
                best = seq;
                upper = p - 1;
            }
            None => lower = p + 1,
        }
    }
    if !is_burning_sequence(oracle, &best)? {
        return Err(Error::Solution("exact search produced an invalid sequence".into()));
    }
    Ok(ExactResult {
        burning_number: best.len(),
        sequence: best,
        probes,
        budget_spent: spent,
    })
}

/// `ceil(sqrt(n))`, the burning number of the path and of the cycle on `n`
/// vertices, in integer arithmetic.
pub fn path_cycle_burning_number(n: usize) -> usize {
    let r = n.isqrt();
    if r * r < n {
        r + 1
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn closed_form() {
        assert_eq!(path_cycle_burning_number(25), 5);
        assert_eq!(path_cycle_burning_number(1), 1);
        assert_eq!(path_cycle_burning_number(10), 4);
        assert_eq!(path_cycle_burning_number(26), 6);
        for n in 1..=1_000_000usize {
            let r = path_cycle_burning_number(n);
            assert!((r - 1) * (r - 1) < n && n <= r * r, "n = {n}");
        }
    }

    #[test]
    fn single_vertex() {
        let g = generate(GraphKind::Path, 1).unwrap();
        let o = DistanceOracle::full(&g);
        let r = exact_solve(&g, &o, ExactBudget::default()).unwrap();
        assert_eq!(r.burning_number, 1);
        assert!(r.probes.is_empty());
    }

    #[test]
    fn small_paths() {
        for n in 1..=12 {
            let g = generate(GraphKind::Path, n).unwrap();
            let o = DistanceOracle::full(&g);
            let r = exact_solve(&g, &o, ExactBudget::default()).unwrap();
            assert_eq!(r.burning_number, path_cycle_burning_number(n), "P{n}");
            if let Some(&(_, cov)) = r.probes.iter().find(|(p, _)| *p + 1 == r.burning_number) {
                assert!(cov < n);
            }
        }
    }

    #[test]
    fn budget_error_carries_bounds() {
        let g = generate(GraphKind::Grid, 5).unwrap();
        let o = DistanceOracle::full(&g);
        let err = exact_solve(&g, &o, ExactBudget { max_combinations: 10 }).unwrap_err();
        match err {
            Error::ExactBudget { probe, lower, upper } => {
                assert!(lower <= probe && probe < upper);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
