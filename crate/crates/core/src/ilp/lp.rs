use std::fmt::Write as _;

use super::{IlpModel, Sense, Term};

/// Continuation lines start once a line would pass this many bytes.
const WRAP: usize = 200;

/// Renders the model in LP text format (objective, `Subject To`,
/// `Binaries`, `End`). Output depends only on the model, byte for byte.
pub fn write_lp(model: &IlpModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ burning {} model: n = {}, {} = {}",
        model.kind,
        model.n,
        match model.kind {
            super::ModelKind::Cmcp => "p",
            _ => "U",
        },
        model.param
    );
    out.push_str(match model.sense {
        Sense::Minimize => "Minimize\n",
        Sense::Maximize => "Maximize\n",
    });
    let mut line = String::from(" obj:");
    push_terms(&mut out, &mut line, model, &model.objective);
    if model.objective_constant != 0 {
        push_piece(&mut out, &mut line, &signed(model.objective_constant, None));
    }
    out.push_str(&line);
    out.push('\n');

    out.push_str("Subject To\n");
    for c in &model.constraints {
        let mut line = format!(" {}:", c.name);
        push_terms(&mut out, &mut line, model, &c.terms);
        push_piece(&mut out, &mut line, &format!(" {} {}", c.relation.symbol(), c.rhs));
        out.push_str(&line);
        out.push('\n');
    }

    out.push_str("Binaries\n");
    let mut line = String::new();
    for name in &model.variables {
        push_piece(&mut out, &mut line, &format!(" {name}"));
    }
    if !line.is_empty() {
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("End\n");
    out
}

fn push_terms(out: &mut String, line: &mut String, model: &IlpModel, terms: &[Term]) {
    for (pos, &(var, coef)) in terms.iter().enumerate() {
        let name = &model.variables[var];
        let piece = if pos == 0 {
            match coef {
                1 => format!(" {name}"),
                -1 => format!(" - {name}"),
                c => format!(" {c} {name}"),
            }
        } else {
            signed(coef, Some(name))
        };
        push_piece(out, line, &piece);
    }
}

fn signed(coef: i64, name: Option<&str>) -> String {
    let sign = if coef < 0 { '-' } else { '+' };
    let mag = coef.unsigned_abs();
    match (mag, name) {
        (1, Some(name)) => format!(" {sign} {name}"),
        (m, Some(name)) => format!(" {sign} {m} {name}"),
        (m, None) => format!(" {sign} {m}"),
    }
}

fn push_piece(out: &mut String, line: &mut String, piece: &str) {
    if !line.is_empty() && line.len() + piece.len() > WRAP {
        out.push_str(line);
        out.push('\n');
        line.clear();
        line.push(' ');
    }
    line.push_str(piece);
}
