#![no_main]

use gburn::{generate, is_burning_sequence, parse_sequence, simulate, DistanceOracle, GraphKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = generate(GraphKind::Grid, 4).unwrap();
    let o = DistanceOracle::full(&g);
    if let Ok(seq) = parse_sequence(text, &g) {
        let valid = is_burning_sequence(&o, &seq).unwrap();
        assert_eq!(simulate(&g, &seq).unwrap().complete, valid);
    }
});
