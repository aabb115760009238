#![no_main]

use gburn::graph::{parse_edge_list, parse_fixture, EdgeListOptions, Indexing};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&flags, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let options = EdgeListOptions {
        indexing: match flags % 3 {
            0 => Indexing::Auto,
            1 => Indexing::Zero,
            _ => Indexing::One,
        },
        largest_component: flags & 4 != 0,
        ..EdgeListOptions::default()
    };
    if let Ok(report) = parse_edge_list(text, &options) {
        let g = report.graph;
        assert!(g.n() > 0 && g.is_connected());
        let again = parse_fixture(&g.to_fixture()).unwrap();
        assert_eq!(again.to_fixture(), g.to_fixture());
    }
});
