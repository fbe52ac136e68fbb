#![no_main]

use icphi::format::{parse_manifest, print_manifest};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_manifest(text) {
        let again = parse_manifest(&print_manifest(&c)).expect("printed manifests parse");
        assert_eq!(again.len(), c.len());
    }
});
