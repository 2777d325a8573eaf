#![no_main]

use holopow::stats::PiecewisePolyDensity;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = PiecewisePolyDensity::from_json(s) {
        assert_eq!(PiecewisePolyDensity::from_json(&d.to_json()).expect("emitted JSON parses"), d);
    }
});
