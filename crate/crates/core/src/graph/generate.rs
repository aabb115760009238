use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Path on `n` vertices.
    Path,
    /// Cycle on `n >= 3` vertices.
    Cycle,
    /// Square `k x k` grid, vertex `row * k + col`.
    Grid,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            "grid" => Ok(GraphKind::Grid),
            _ => Err(Error::InvalidArgument(format!("unknown graph kind {s:?}"))),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Grid => "grid",
        })
    }
}

pub fn generate(kind: GraphKind, param: usize) -> Result<Graph> {
    if param == 0 {
        return Err(Error::InvalidArgument(format!("{kind} parameter must be at least 1")));
    }
    let (n, edges) = match kind {
        GraphKind::Path => (param, (1..param).map(|i| (i - 1, i)).collect::<Vec<_>>()),
        GraphKind::Cycle => {
            if param < 3 {
                return Err(Error::InvalidArgument(format!(
                    "cycle needs at least 3 vertices, got {param}"
                )));
            }
            (param, (0..param).map(|i| (i, (i + 1) % param)).collect())
        }
        GraphKind::Grid => {
            let k = param;
            let n = k.checked_mul(k).ok_or_else(|| {
                Error::InvalidArgument(format!("grid side {k} too large"))
            })?;
            let mut edges = Vec::with_capacity(2 * k * (k - 1));
            for r in 0..k {
                for c in 0..k {
                    let v = r * k + c;
                    if c + 1 < k {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < k {
                        edges.push((v, v + k));
                    }
                }
            }
            (n, edges)
        }
    };
    Graph::from_edges(n, &edges)
}
