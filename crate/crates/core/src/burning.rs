//! Burning sequences: validation by distances and step-by-step propagation.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph, Vertex};

/// Ordered vertex list `(u_1, ..., u_p)`; `u_i` is ignited at step `i`.
///
/// Repeated vertices are accepted here. Solvers never produce them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BurningSequence(Vec<Vertex>);

impl BurningSequence {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        BurningSequence(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Vertex> {
        self.0
    }

    pub fn has_repeats(&self) -> bool {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.windows(2).any(|w| w[0] == w[1])
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::InvalidArgument("burning sequence is empty".into()));
        }
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// Comma-separated external labels, e.g. `2,4`.
    pub fn to_labels(&self, graph: &Graph) -> String {
        let labels: Vec<String> = self.0.iter().map(|&v| graph.label(v).to_string()).collect();
        labels.join(",")
    }
}

impl From<Vec<Vertex>> for BurningSequence {
    fn from(v: Vec<Vertex>) -> Self {
        BurningSequence(v)
    }
}

/// Parses a one-line sequence of external labels separated by commas or
/// whitespace. A leading alphabetic prefix on a token is ignored, so `v2,v4`
/// and `2,4` read the same labels.
pub fn parse_sequence(text: &str, graph: &Graph) -> Result<BurningSequence> {
    let mut out = Vec::new();
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let digits = token.trim_start_matches(|c: char| c.is_ascii_alphabetic() || c == '_');
        let label: i64 = digits.parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("bad sequence entry {token:?}"),
        })?;
        let v = graph.vertex_by_label(label).ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("no vertex with label {label}"),
        })?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(Error::Empty("sequence has no entries".into()));
    }
    Ok(BurningSequence(out))
}

/// An uncovered vertex together with the sequence entry that comes closest
/// to covering it: `distance(vertex, u_index) > p - index` (1-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub index: usize,
    pub distance: usize,
}

/// Checks that every vertex lies within `p - i` hops of some `u_i`.
pub fn is_burning_sequence(oracle: &DistanceOracle, seq: &BurningSequence) -> Result<bool> {
    Ok(first_violation(oracle, seq)?.is_none())
}

/// The lowest-id uncovered vertex, if any.
pub fn first_violation(oracle: &DistanceOracle, seq: &BurningSequence) -> Result<Option<Violation>> {
    let n = oracle.n();
    seq.check(n)?;
    let p = seq.len();
    // slack[v] = min_i (d(v, u_i) - (p - i)); covered iff <= 0
    let mut slack = vec![(i64::MAX, 0usize, 0usize); n];
    for (i0, &u) in seq.vertices().iter().enumerate() {
        let radius = (p - 1 - i0) as i64;
        let row = oracle.row(u);
        for (v, s) in slack.iter_mut().enumerate() {
            let d = row[v] as i64;
            if d - radius < s.0 {
                *s = (d - radius, i0 + 1, d as usize);
            }
        }
    }
    Ok(slack
        .iter()
        .enumerate()
        .find(|(_, s)| s.0 > 0)
        .map(|(vertex, &(_, index, distance))| Violation {
            vertex,
            index,
            distance,
        }))
}

/// Per-step burned sets of a propagation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnTrace {
    /// `steps[j]` is the sorted set burned after step `j + 1`.
    pub steps: Vec<Vec<Vertex>>,
    pub complete: bool,
}

impl BurnTrace {
    /// Vertices that caught fire in step `j` (0-based).
    pub fn newly_burned(&self, j: usize) -> Vec<Vertex> {
        match j {
            0 => self.steps[0].clone(),
            _ => {
                let prev = &self.steps[j - 1];
                self.steps[j]
                    .iter()
                    .copied()
                    .filter(|v| prev.binary_search(v).is_err())
                    .collect()
            }
        }
    }

    /// One line per step with the labels burned in that step.
    pub fn to_text(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for j in 0..self.steps.len() {
            let labels: Vec<String> = self
                .newly_burned(j)
                .iter()
                .map(|&v| graph.label(v).to_string())
                .collect();
            let _ = writeln!(out, "{}: {}", j + 1, labels.join(" "));
        }
        out
    }
}

/// Runs the burning process: at each step the fire spreads to neighbors of
/// burned vertices, then the next source is ignited.
pub fn simulate(graph: &Graph, seq: &BurningSequence) -> Result<BurnTrace> {
    let n = graph.n();
    seq.check(n)?;
    let mut burned = vec![false; n];
    let mut frontier: Vec<Vertex> = Vec::new();
    let mut all: Vec<Vertex> = Vec::new();
    let mut steps = Vec::with_capacity(seq.len());
    for (j, &source) in seq.vertices().iter().enumerate() {
        let mut next = Vec::new();
        if j > 0 {
            for &u in &frontier {
                for &w in graph.neighbors(u) {
                    if !burned[w] {
                        burned[w] = true;
                        next.push(w);
                    }
                }
            }
        }
        if !burned[source] {
            burned[source] = true;
            next.push(source);
        }
        all.extend_from_slice(&next);
        all.sort_unstable();
        steps.push(all.clone());
        frontier = next;
    }
    let complete = all.len() == n;
    Ok(BurnTrace { steps, complete })
}
