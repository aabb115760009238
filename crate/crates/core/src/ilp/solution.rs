use std::collections::BTreeMap;

use super::{IlpModel, ModelKind};
use crate::burning::{is_burning_sequence, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::DistanceOracle;

/// Largest accepted distance of a solver value from 0 or 1.
pub const BINARY_TOLERANCE: f64 = 1e-6;

/// Variable name to solver value.
pub type Assignment = BTreeMap<String, f64>;

/// Reads `name value` lines. Blank lines and lines starting with `#` are
/// skipped.
pub fn parse_solution(text: &str) -> Result<Assignment> {
    let mut out = Assignment::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::Parse { line: idx + 1, msg };
        let mut it = line.split_whitespace();
        let (Some(name), Some(value), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad("expected `name value`".into()));
        };
        let value: f64 = value
            .parse()
            .map_err(|_| bad(format!("value {value:?} is not a number")))?;
        out.insert(name.to_string(), value);
    }
    Ok(out)
}

/// Rounds every model variable to 0/1. Variables absent from the
/// assignment read as 0; names the model does not know are ignored.
fn binary_values(model: &IlpModel, assignment: &Assignment) -> Result<Vec<bool>> {
    model
        .variables
        .iter()
        .map(|name| {
            let v = assignment.get(name).copied().unwrap_or(0.0);
            if (v - 0.0).abs() <= BINARY_TOLERANCE {
                Ok(false)
            } else if (v - 1.0).abs() <= BINARY_TOLERANCE {
                Ok(true)
            } else {
                Err(Error::Solution(format!("{name} = {v} is not binary")))
            }
        })
        .collect()
}

/// Ones of row `i` in an `rows x n` block starting at `base`.
fn row_picks(values: &[bool], base: usize, n: usize, i: usize) -> Vec<usize> {
    (0..n).filter(|&k| values[base + i * n + k]).collect()
}

/// Extracts the burning sequence encoded by a solver assignment and checks it.
pub fn decode_solution(model: &IlpModel, assignment: &Assignment, oracle: &DistanceOracle) -> Result<BurningSequence> {
    let values = binary_values(model, assignment)?;
    let n = model.n;
    if oracle.n() != n {
        return Err(Error::Solution(format!(
            "model built for {n} vertices, graph has {}",
            oracle.n()
        )));
    }
    let seq = match model.kind {
        ModelKind::Prop => {
            let upper = model.param;
            // s block is vertex-major: s_i_j at i * U + (j - 1)
            let s = |i: usize, j: usize| values[i * upper + j];
            let b = |i: usize, j: usize| values[n * upper + i * upper + j];
            let mut seq = Vec::new();
            for j in 0..upper {
                let picks: Vec<usize> = (0..n).filter(|&i| s(i, j)).collect();
                let [v] = picks[..] else {
                    return Err(Error::Solution(format!(
                        "step {} ignites {} vertices",
                        j + 1,
                        picks.len()
                    )));
                };
                seq.push(v);
                if (0..n).all(|i| b(i, j)) {
                    break;
                }
            }
            seq
        }
        ModelKind::Cmcp | ModelKind::Cov => {
            let rows = model.param;
            let mut centers = Vec::with_capacity(rows);
            for i in 0..rows {
                let picks = row_picks(&values, 0, n, i);
                match (model.kind, picks.len()) {
                    (_, 1) => centers.push(picks[0]),
                    (ModelKind::Cov, 0) => {}
                    (_, count) => {
                        return Err(Error::Solution(format!("row {} picks {count} centers", i + 1)));
                    }
                }
            }
            centers.reverse();
            centers
        }
    };
    if seq.is_empty() {
        return Err(Error::Solution("assignment selects no vertex".into()));
    }
    let seq = BurningSequence::new(seq);
    if !is_burning_sequence(oracle, &seq)? {
        return Err(Error::Solution("decoded sequence does not burn the graph".into()));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::ilp::{emit_cmcp, emit_cov, emit_prop};

    fn p4() -> DistanceOracle {
        DistanceOracle::full(&generate(GraphKind::Path, 4).unwrap())
    }

    fn ones(names: &[&str]) -> Assignment {
        names.iter().map(|n| (n.to_string(), 1.0)).collect()
    }

    #[test]
    fn parse_lines() {
        let a = parse_solution("# Objective value = 2\n\nx_1_4 1\nx_2_2 0.9999999\nb_1 1e-9\n").unwrap();
        assert_eq!(a.len(), 3);
        assert!(parse_solution("x_1\n").is_err());
        assert!(parse_solution("x_1 one\n").is_err());
        assert!(parse_solution("x_1 1 2\n").is_err());
    }

    #[test]
    fn cmcp_p4() {
        let o = p4();
        let m = emit_cmcp(&o, 2).unwrap();
        // N_0[v4] from the radius-0 row, N_1[v2] from the radius-1 row
        let mut a = ones(&["x_1_4", "x_2_2", "b_1", "b_2", "b_3", "b_4"]);
        a.insert("x_1_1".into(), 1e-8);
        assert_eq!(decode_solution(&m, &a, &o).unwrap().vertices(), &[1, 3]);

        let two_picks = ones(&["x_1_4", "x_1_3", "x_2_2"]);
        assert!(decode_solution(&m, &two_picks, &o).is_err());
        let no_pick = ones(&["x_2_2"]);
        assert!(decode_solution(&m, &no_pick, &o).is_err());
        let bad_cover = ones(&["x_1_1", "x_2_2"]);
        assert!(decode_solution(&m, &bad_cover, &o).is_err());
        let mut fractional = ones(&["x_1_4", "x_2_2"]);
        fractional.insert("b_1".into(), 0.5);
        assert!(decode_solution(&m, &fractional, &o).is_err());
    }

    #[test]
    fn cov_skips_empty_rows() {
        let k1 = generate(GraphKind::Path, 1).unwrap();
        let o = DistanceOracle::full(&k1);
        let m = emit_cov(&o, 1).unwrap();
        assert_eq!(decode_solution(&m, &ones(&["x_1_1", "b_1"]), &o).unwrap().vertices(), &[0]);

        let o = p4();
        let m = emit_cov(&o, 3).unwrap();
        let a = ones(&["x_1_4", "x_2_2", "b_1", "b_2", "b_3", "b_4"]);
        assert_eq!(decode_solution(&m, &a, &o).unwrap().vertices(), &[1, 3]);
        assert!(decode_solution(&m, &Assignment::new(), &o).is_err());
    }

    #[test]
    fn prop_p4() {
        let g = generate(GraphKind::Path, 4).unwrap();
        let o = p4();
        let m = emit_prop(&g, 3).unwrap();
        // ignite v2, then v4; everything burned at step 2
        let a = ones(&[
            "s_2_1", "s_4_2", "s_1_3", "b_2_1", "b_1_2", "b_2_2", "b_3_2", "b_4_2", "b_1_3", "b_2_3", "b_3_3",
            "b_4_3", "x_1",
        ]);
        assert_eq!(decode_solution(&m, &a, &o).unwrap().vertices(), &[1, 3]);
        let double = ones(&["s_2_1", "s_3_1"]);
        assert!(decode_solution(&m, &double, &o).is_err());
    }
}
