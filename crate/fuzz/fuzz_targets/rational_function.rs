#![no_main]

use holopow::algebra::parse_rational_function;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rational_function(s) {
        let again = parse_rational_function(&r.to_string()).expect("rendered form parses");
        assert_eq!(again, r);
    }
});
