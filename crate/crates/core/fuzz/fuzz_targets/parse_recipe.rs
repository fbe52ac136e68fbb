#![no_main]

use icphi::GroupRecipe;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(r) = text.parse::<GroupRecipe>() else { return };
    let shown = r.to_string();
    assert_eq!(shown.parse::<GroupRecipe>().expect("displayed recipes parse"), r);
    if r.predicted_order().is_ok_and(|n| n <= 64) {
        if let Ok(g) = r.materialize() {
            assert_eq!(g.order() as u64, r.predicted_order().unwrap());
        }
    }
});
