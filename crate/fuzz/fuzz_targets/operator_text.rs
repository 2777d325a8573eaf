#![no_main]

use holopow::weyl::{operator_from_text, operator_to_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(op) = operator_from_text(s) {
        let again = operator_from_text(&operator_to_text(&op)).expect("rendered form parses");
        assert_eq!(again, op);
    }
});
