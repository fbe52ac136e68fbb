#![no_main]

use icphi::StatementId;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<StatementId>() {
        assert_eq!(s.as_str().parse::<StatementId>().unwrap(), s);
        assert!(text.eq_ignore_ascii_case(s.as_str()));
    }
});
