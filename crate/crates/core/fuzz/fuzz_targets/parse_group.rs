#![no_main]

use icphi::format::{parse_group, print_group};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group(text) {
        let again = parse_group(&print_group(&g)).expect("printed groups parse");
        assert_eq!(again.elements(), g.elements());
    }
});
