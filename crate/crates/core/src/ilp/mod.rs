//! Integer programs for graph burning and a solver-neutral LP writer.
//!
//! Three formulations are built, all over binary variables:
//!
//! * `Prop` follows the fire step by step (`s_i_j`: vertex `i` ignited at
//!   step `j`, `b_i_j`: vertex `i` burned at step `j`, `x_j`: some vertex is
//!   still unburned at step `j`).
//! * `Cmcp` is the clustered coverage model for a guess `p` (`x_i_j`: center
//!   `j` picked in the radius `i-1` cluster, `b_j`: vertex `j` covered).
//! * `Cov` drops the guess and minimizes the number of picks below an upper
//!   bound `U`.
//!
//! Boundary terms (no vertex burned before step 1, a virtual row 0 that is
//! always used) are folded into constants, so no extra variables appear.

mod lp;
mod solution;

pub use lp::write_lp;
pub use solution::{decode_solution, parse_solution, Assignment, BINARY_TOLERANCE};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Prop,
    Cmcp,
    Cov,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Prop => "prop",
            ModelKind::Cmcp => "cmcp",
            ModelKind::Cov => "cov",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop" => Ok(ModelKind::Prop),
            "cmcp" => Ok(ModelKind::Cmcp),
            "cov" => Ok(ModelKind::Cov),
            _ => Err(Error::InvalidArgument(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

/// `(variable index, coefficient)`.
pub type Term = (usize, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<Term>,
    pub relation: Relation,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpModel {
    pub kind: ModelKind,
    pub sense: Sense,
    pub objective: Vec<Term>,
    pub objective_constant: i64,
    /// Binary variable names; a variable's index is its position.
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
    /// Vertex count of the source graph.
    pub n: usize,
    /// Upper bound `U` (prop, cov) or guess `p` (cmcp).
    pub param: usize,
}

impl IlpModel {
    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn variable_index(&self) -> HashMap<&str, usize> {
        self.variables
            .iter()
            .enumerate()
            .map(|(i, name)| (name.as_str(), i))
            .collect()
    }
}

/// Row-major block of names `{prefix}_{i}_{j}` for `i in 1..=rows`, `j in 1..=cols`.
fn grid_names(out: &mut Vec<String>, prefix: &str, rows: usize, cols: usize) -> usize {
    let start = out.len();
    for i in 1..=rows {
        for j in 1..=cols {
            out.push(format!("{prefix}_{i}_{j}"));
        }
    }
    start
}

fn check_param(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Propagation model with upper bound `U`: `2Un + U` variables and as many
/// constraints.
pub fn emit_prop(graph: &Graph, upper: usize) -> Result<IlpModel> {
    check_param("U", upper)?;
    let n = graph.n();
    let mut variables = Vec::with_capacity(2 * upper * n + upper);
    let s0 = grid_names(&mut variables, "s", n, upper);
    let b0 = grid_names(&mut variables, "b", n, upper);
    let x0 = variables.len();
    variables.extend((1..=upper).map(|j| format!("x_{j}")));
    let s = |i: usize, j: usize| s0 + i * upper + (j - 1);
    let b = |i: usize, j: usize| b0 + i * upper + (j - 1);
    let x = |j: usize| x0 + j - 1;

    let mut constraints = Vec::with_capacity(2 * upper * n + upper);
    for i in 0..n {
        for j in 1..=upper {
            constraints.push(Constraint {
                name: format!("unburned_{}_{j}", i + 1),
                terms: vec![(x(j), 1), (b(i, j), 1)],
                relation: Relation::Ge,
                rhs: 1,
            });
        }
    }
    for i in 0..n {
        for j in 1..=upper {
            let mut terms = vec![(b(i, j), 1), (s(i, j), -1)];
            if j > 1 {
                let mut closed: Vec<usize> = graph.neighbors(i).to_vec();
                closed.push(i);
                closed.sort_unstable();
                terms.extend(closed.into_iter().map(|k| (b(k, j - 1), -1)));
            }
            constraints.push(Constraint {
                name: format!("spread_{}_{j}", i + 1),
                terms,
                relation: Relation::Le,
                rhs: 0,
            });
        }
    }
    for j in 1..=upper {
        constraints.push(Constraint {
            name: format!("ignite_{j}"),
            terms: (0..n).map(|i| (s(i, j), 1)).collect(),
            relation: Relation::Eq,
            rhs: 1,
        });
    }
    Ok(IlpModel {
        kind: ModelKind::Prop,
        sense: Sense::Minimize,
        objective: (1..=upper).map(|j| (x(j), 1)).collect(),
        objective_constant: 1,
        variables,
        constraints,
        n,
        param: upper,
    })
}

/// Coverage terms `sum_i sum_{k in N_{i-1}[v_j]} x_i_k` for every vertex `j`.
fn cover_constraints(oracle: &DistanceOracle, rows: usize, x: impl Fn(usize, usize) -> usize, b: impl Fn(usize) -> usize) -> Vec<Constraint> {
    let n = oracle.n();
    (0..n)
        .map(|j| {
            let mut terms = vec![(b(j), 1)];
            for i in 1..=rows {
                terms.extend(oracle.closed_neighborhood(j, i - 1).into_iter().map(|k| (x(i, k), -1)));
            }
            Constraint {
                name: format!("cover_{}", j + 1),
                terms,
                relation: Relation::Le,
                rhs: 0,
            }
        })
        .collect()
}

/// Clustered coverage model for a guess `p`: `pn + n` variables, `p + n`
/// constraints.
pub fn emit_cmcp(oracle: &DistanceOracle, p: usize) -> Result<IlpModel> {
    check_param("p", p)?;
    let n = oracle.n();
    let mut variables = Vec::with_capacity(p * n + n);
    grid_names(&mut variables, "x", p, n);
    variables.extend((1..=n).map(|j| format!("b_{j}")));
    let x = |i: usize, k: usize| (i - 1) * n + k;
    let b = |j: usize| p * n + j;

    let mut constraints: Vec<Constraint> = (1..=p)
        .map(|i| Constraint {
            name: format!("pick_{i}"),
            terms: (0..n).map(|k| (x(i, k), 1)).collect(),
            relation: Relation::Eq,
            rhs: 1,
        })
        .collect();
    constraints.extend(cover_constraints(oracle, p, x, b));
    Ok(IlpModel {
        kind: ModelKind::Cmcp,
        sense: Sense::Maximize,
        objective: (0..n).map(|j| (b(j), 1)).collect(),
        objective_constant: 0,
        variables,
        constraints,
        n,
        param: p,
    })
}

/// Coverage-minimization model with upper bound `U`: `Un + n` variables,
/// `2U + n + 1` constraints.
pub fn emit_cov(oracle: &DistanceOracle, upper: usize) -> Result<IlpModel> {
    check_param("U", upper)?;
    let n = oracle.n();
    let mut variables = Vec::with_capacity(upper * n + n);
    grid_names(&mut variables, "x", upper, n);
    variables.extend((1..=n).map(|j| format!("b_{j}")));
    let x = |i: usize, k: usize| (i - 1) * n + k;
    let b = |j: usize| upper * n + j;

    let mut constraints = Vec::with_capacity(2 * upper + n + 1);
    for i in 1..=upper {
        let mut terms: Vec<Term> = (0..n).map(|k| (x(i, k), 1)).collect();
        // row 0 is always used, so its sum is the constant 1
        let rhs = if i == 1 {
            1
        } else {
            terms.extend((0..n).map(|k| (x(i - 1, k), -1)));
            0
        };
        constraints.push(Constraint {
            name: format!("order_{i}"),
            terms,
            relation: Relation::Le,
            rhs,
        });
    }
    for i in 1..=upper {
        constraints.push(Constraint {
            name: format!("pick_{i}"),
            terms: (0..n).map(|k| (x(i, k), 1)).collect(),
            relation: Relation::Le,
            rhs: 1,
        });
    }
    constraints.extend(cover_constraints(oracle, upper, x, b));
    constraints.push(Constraint {
        name: "all_burned".into(),
        terms: (0..n).map(|j| (b(j), 1)).collect(),
        relation: Relation::Eq,
        rhs: n as i64,
    });
    Ok(IlpModel {
        kind: ModelKind::Cov,
        sense: Sense::Minimize,
        objective: (0..upper * n).map(|v| (v, 1)).collect(),
        objective_constant: 0,
        variables,
        constraints,
        n,
        param: upper,
    })
}
