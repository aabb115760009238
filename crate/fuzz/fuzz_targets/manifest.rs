#![no_main]

use gburn::bench::parse_manifest;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entries) = parse_manifest(text) {
        for e in entries {
            assert!(!e.name.is_empty());
            let again: gburn::bench::GraphSource = e.source.to_string().parse().unwrap();
            assert_eq!(again, e.source);
        }
    }
});
