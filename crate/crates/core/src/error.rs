use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("empty input: {0}")]
    Empty(String),

    #[error("graph is disconnected ({components} components); use the largest-component option")]
    Disconnected { components: usize },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("combination budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// Raised by the exact solver; carries the bounds on b(G) known at abort.
    #[error("combination budget exceeded while probing p = {probe} (known bounds {lower}..={upper})")]
    ExactBudget {
        probe: usize,
        lower: usize,
        upper: usize,
    },

    #[error("time limit exceeded")]
    TimeLimit,

    #[error("selection does not come from a burning reduction with p = {0}")]
    NotGbpSelection(usize),

    #[error("invalid solution: {0}")]
    Solution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
