#![no_main]

use gburn::{exact_cmcp, greedy_cmcp, CmcpInstance, TieBreak};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(inst) = CmcpInstance::parse(text) else { return };
    assert_eq!(CmcpInstance::parse(&inst.to_text()).unwrap().to_text(), inst.to_text());
    if inst.universe_size() > 4096 {
        return;
    }
    if let Ok(exact) = exact_cmcp(&inst, 20_000) {
        let greedy = greedy_cmcp(&inst, &TieBreak::SmallestIndex);
        assert!(2 * greedy.covered_count >= exact.covered_count);
    }
});
