//! Graph burning through clustered maximum coverage.
//!
//! A burning sequence `(u_1, ..., u_p)` ignites `u_i` at step `i` while fire
//! spreads one hop per step; it burns the graph when every vertex lies within
//! `p - i` hops of some `u_i`. For a guess `p`, picking one radius-`r` ball for
//! each `r < p` to cover all vertices is a clustered maximum coverage instance,
//! which this crate solves greedily ([`heuristics`]) or exactly ([`exact`]).
//! The [`ilp`] module writes the matching integer programs for external
//! solvers.
//!
//! ```
//! use gburn::{binary_search_solve, generate, DistanceOracle, GraphKind, Strategy, TieBreak};
//!
//! let g = generate(GraphKind::Grid, 10)?;
//! let oracle = DistanceOracle::full(&g);
//! let report = binary_search_solve(&g, &oracle, Strategy::Grp, &TieBreak::SmallestIndex)?;
//! assert_eq!(report.sequence.len(), 6);
//! # Ok::<(), gburn::Error>(())
//! ```

pub mod bench;
pub mod burning;
pub mod cmcp;
pub mod error;
pub mod exact;
pub mod graph;
pub mod heuristics;
pub mod ilp;
mod ties;

pub use burning::{first_violation, is_burning_sequence, parse_sequence, simulate, BurnTrace, BurningSequence};
pub use cmcp::{exact_cmcp, gbp_to_cmcp, greedy_cmcp, selection_to_sequence, CmcpInstance, Selection};
pub use error::{Error, Result};
pub use exact::{exact_solve, path_cycle_burning_number, ExactBudget, ExactResult};
pub use graph::{generate, parse_edge_list, DistanceOracle, Graph, GraphKind, Vertex};
pub use heuristics::{bff, binary_search_solve, gr, grp, half_coverage_test, SolveReport, Strategy};
pub use ties::TieBreak;
