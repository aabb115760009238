#![no_main]

use gburn::graph::parse_fixture;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_fixture(text) {
        assert!(g.is_connected());
        assert_eq!(parse_fixture(&g.to_fixture()).unwrap().to_fixture(), g.to_fixture());
    }
});
