#![no_main]

use holopow::numeric::density::MAX_GRID_POINTS;
use holopow::numeric::parse_grid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_grid(s) {
        assert!(!g.is_empty() && g.len() <= MAX_GRID_POINTS);
        assert!(g.iter().all(|x| x.is_finite()));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
});
