//! Oscillatory tails `J_l = int_{T'}^inf e^(it) t^(-l/3) dt`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::quad::{integrate, QuadOptions};
use super::special::{cisi, GAMMA_ONE_THIRD, GAMMA_TWO_THIRDS};
use super::NumericError;

/// `int_0^inf e^(it) t^(-p) dt` for `p = 1/3, 2/3`, from
/// `int_0^inf sin(x)/x^p = pi / (2 Gamma(p) sin(p pi/2))` and its cosine twin.
pub fn full_line(l: u32) -> Complex64 {
    let (p, g) = match l {
        1 => (1.0 / 3.0, GAMMA_ONE_THIRD),
        2 => (2.0 / 3.0, GAMMA_TWO_THIRDS),
        _ => panic!("full-line value only for l = 1, 2"),
    };
    Complex64::new(PI / (2.0 * g * (p * FRAC_PI_2).cos()), PI / (2.0 * g * (p * FRAC_PI_2).sin()))
}

/// `J_1 .. J_{l_max}` at `T' > 0`.
pub fn j_values(tp: f64, l_max: usize) -> Result<Vec<Complex64>, NumericError> {
    if !(tp > 0.0 && tp.is_finite()) {
        return Err(NumericError::Domain(format!("T' must be positive, got {tp}")));
    }
    let opts = QuadOptions {
        abs_tol: 1e-13,
        rel_tol: 1e-14,
        max_intervals: 20_000,
    };
    let mut j = Vec::with_capacity(l_max.max(3));
    for l in 1..=2u32 {
        // t = s^3 removes the endpoint singularity: e^(is^3) 3 s^(2-l)
        let head = integrate(
            |s| Complex64::new(0.0, s * s * s).exp() * (3.0 * s.powi(2 - l as i32)),
            0.0,
            tp.cbrt(),
            &opts,
        )?;
        j.push(full_line(l) - head.value);
    }
    let (ci, si) = cisi(tp);
    j.push(Complex64::new(-ci, FRAC_PI_2 - si));
    let e = Complex64::new(0.0, tp).exp();
    let i = Complex64::i();
    for l in 1..l_max.saturating_sub(2) {
        let next = (e * tp.powf(-(l as f64) / 3.0) + i * j[l - 1]) * (3.0 / l as f64);
        j.push(next);
    }
    j.truncate(l_max);
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `int_X^inf e^(it) t^(-a) dt` from the integration-by-parts series.
    fn tail(x: f64, a: f64, terms: usize) -> Complex64 {
        let i = Complex64::i();
        let mut out = Complex64::new(0.0, 0.0);
        let mut coef = Complex64::new(1.0, 0.0);
        for q in 0..terms {
            let aq = a + q as f64;
            out += coef * i * Complex64::new(0.0, x).exp() * x.powf(-aq);
            coef *= -i * aq;
        }
        out
    }

    #[test]
    fn full_line_formula() {
        // reflection form Gamma(1-p) (sin(p pi/2) + i cos(p pi/2))
        let want = Complex64::from_polar(GAMMA_TWO_THIRDS, PI / 3.0);
        assert!((full_line(1) - want).norm() < 1e-15);
        assert!((full_line(1).im - PI / (2.0 * GAMMA_ONE_THIRD * (PI / 6.0).sin())).abs() < 1e-15);
    }

    #[test]
    fn recursion_matches_direct_quadrature() {
        let tp = 5.0;
        let j = j_values(tp, 6).unwrap();
        let x = tp + 200.0;
        for (l, jl) in j.iter().enumerate().map(|(k, v)| (k + 1, v)) {
            let a = l as f64 / 3.0;
            let opts = QuadOptions::abs(1e-13);
            let head = integrate(|t| Complex64::new(0.0, t).exp() * t.powf(-a), tp, x, &opts).unwrap();
            let want = head.value + tail(x, a, 6);
            assert!((jl - want).norm() < 1e-8, "J_{l}: {jl} vs {want}");
        }
    }

    #[test]
    fn decays() {
        let a = j_values(10.0, 3).unwrap();
        let b = j_values(1e3, 3).unwrap();
        assert!(b[0].norm() < a[0].norm());
        assert!(j_values(0.0, 3).is_err());
    }
}
