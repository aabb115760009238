#![no_main]

use gburn::ilp::{decode_solution, emit_cmcp, emit_cov, emit_prop, parse_solution};
use gburn::{generate, is_burning_sequence, DistanceOracle, GraphKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(assignment) = parse_solution(text) else { return };
    let g = generate(GraphKind::Path, 4).unwrap();
    let o = DistanceOracle::full(&g);
    for model in [
        emit_cmcp(&o, 2).unwrap(),
        emit_cov(&o, 3).unwrap(),
        emit_prop(&g, 3).unwrap(),
    ] {
        if let Ok(seq) = decode_solution(&model, &assignment, &o) {
            assert!(is_burning_sequence(&o, &seq).unwrap());
        }
    }
});
