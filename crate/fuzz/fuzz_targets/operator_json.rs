#![no_main]

use holopow::weyl::{operator_from_json, operator_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(op) = operator_from_json(s) {
        let json = operator_to_json(&op).expect("parsed operators have polynomial coefficients");
        assert_eq!(operator_from_json(&json).expect("emitted JSON parses"), op);
    }
});
