//! Special functions: multifactorials, the Airy function near the origin,
//! cosine/sine integrals, and the density of a cubed standard normal.

use std::f64::consts::{FRAC_PI_2, PI};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::Rational;

pub const GAMMA_ONE_THIRD: f64 = 2.678_938_534_707_747_6;
pub const GAMMA_TWO_THIRDS: f64 = 1.354_117_939_426_400_4;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `n!m = n (n-m) (n-2m) ...` over the positive factors; `1` for `n <= 0`.
pub fn multifactorial(n: i64, m: u32) -> Rational {
    assert!(m >= 1, "multifactorial step must be positive");
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 0 {
        acc *= k;
        k -= m as i64;
    }
    Rational::from_integer(acc)
}

/// Largest Airy argument accepted by [`airy_ai`].
pub const AIRY_MAX_ARG: f64 = 2.0;

/// Maclaurin coefficients of `Ai`: `Ai(z) = Ai(0) f(z) + Ai'(0) g(z)` with
/// `f = sum 3^k (1/3)_k z^(3k) / (3k)!`, `g = sum 3^k (2/3)_k z^(3k+1) / (3k+1)!`.
pub fn airy_coeffs(len: usize) -> Vec<f64> {
    let ai0 = 3f64.powf(-2.0 / 3.0) / GAMMA_TWO_THIRDS;
    let dai0 = -(3f64.powf(-1.0 / 3.0)) / GAMMA_ONE_THIRD;
    let mut c = vec![0.0; len];
    // running values of 3^k (1/3)_k / (3k)! and 3^k (2/3)_k / (3k+1)!
    let (mut pf, mut pg) = (1.0, 1.0);
    let mut k = 0usize;
    while 3 * k < len {
        c[3 * k] = ai0 * pf;
        if 3 * k + 1 < len {
            c[3 * k + 1] = dai0 * pg;
        }
        let kf = k as f64;
        pf *= 3.0 * (kf + 1.0 / 3.0) / ((3.0 * kf + 1.0) * (3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        pg *= 3.0 * (kf + 2.0 / 3.0) / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        k += 1;
    }
    c
}

/// `(Ai(z), Ai'(z))` by the Maclaurin series, for `|z| <= AIRY_MAX_ARG`.
pub fn airy_ai(z: f64) -> Option<(f64, f64)> {
    if !(z.abs() <= AIRY_MAX_ARG) {
        return None;
    }
    let c = airy_coeffs(60);
    let (mut v, mut d) = (0.0, 0.0);
    for (j, cj) in c.iter().enumerate().rev() {
        v = v * z + cj;
        if j > 0 {
            d = d * z + j as f64 * cj;
        }
    }
    Some((v, d))
}

/// `(Ci(x), Si(x))` for `x > 0`: power series below 2, otherwise the
/// continued fraction of `E1(ix)` evaluated by the modified Lentz method.
pub fn cisi(x: f64) -> (f64, f64) {
    assert!(x > 0.0, "cisi needs a positive argument");
    if x < 2.0 {
        let x2 = x * x;
        let (mut ci, mut si) = (0.0, 0.0);
        let mut term = 1.0; // (-1)^k x^(2k) / (2k)!
        let mut k = 0u32;
        loop {
            let kk = 2.0 * k as f64;
            if k > 0 {
                ci += term / kk;
            }
            let sterm = term * x / (kk + 1.0); // (-1)^k x^(2k+1) / (2k+1)!
            si += sterm / (kk + 1.0);
            term *= -x2 / ((kk + 1.0) * (kk + 2.0));
            k += 1;
            if term.abs() < 1e-18 && k > 2 {
                break;
            }
        }
        return (EULER_GAMMA + x.ln() + ci, si);
    }
    let tiny = 1e-300;
    let mut b = num_complex::Complex64::new(1.0, x);
    let mut c = num_complex::Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..10_000 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    let cs = num_complex::Complex64::new(x.cos(), -x.sin()) * h;
    let cs = -cs.conj() + num_complex::Complex64::new(0.0, FRAC_PI_2);
    (cs.re, cs.im)
}

/// Density of `X^3` for standard normal `X`:
/// `|x|^(-2/3) exp(-|x|^(2/3) / 2) / (3 sqrt(2 pi))`.
pub fn cube_normal_density(x: f64) -> f64 {
    let a = x.abs();
    let u = a.powf(2.0 / 3.0);
    (-u / 2.0).exp() / (u * 3.0 * (2.0 * PI).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn multifactorials() {
        assert_eq!(multifactorial(7, 6), rat(7, 1));
        assert_eq!(multifactorial(-5, 6), rat(1, 1));
        assert_eq!(multifactorial(0, 6), rat(1, 1));
        assert_eq!(multifactorial(12, 6), rat(72, 1));
        assert_eq!(multifactorial(5, 1), rat(120, 1));
        assert_eq!(multifactorial(9, 2), rat(945, 1));
    }

    #[test]
    fn gamma_constants() {
        // reflection: Gamma(1/3) Gamma(2/3) = pi / sin(pi/3)
        let lhs = GAMMA_ONE_THIRD * GAMMA_TWO_THIRDS;
        assert!((lhs - PI / (PI / 3.0).sin()).abs() < 1e-15);
    }

    #[test]
    fn airy_values() {
        let (a0, d0) = airy_ai(0.0).unwrap();
        assert!((a0 - 3f64.powf(-2.0 / 3.0) / GAMMA_TWO_THIRDS).abs() < 1e-16);
        assert!((a0 - 0.355_028_053_887_817_2).abs() < 1e-15);
        assert!((d0 + 0.258_819_403_792_806_8).abs() < 1e-15);
        assert!((airy_ai(1.0).unwrap().0 - 0.135_292_416_312_881_4).abs() < 1e-15);
        assert!((airy_ai(0.5).unwrap().0 - 0.231_693_606_480_833_4).abs() < 1e-15);
        assert!(airy_ai(3.0).is_none());
    }

    #[test]
    fn airy_series_solves_airy_equation() {
        let c = airy_coeffs(40);
        for z in [-1.5f64, -0.3, 0.2, 1.0, 1.9] {
            let second: f64 = c.iter().enumerate().skip(2).map(|(j, cj)| (j * (j - 1)) as f64 * cj * z.powi(j as i32 - 2)).sum();
            let (ai, _) = airy_ai(z).unwrap();
            assert!((second - z * ai).abs() < 1e-14, "z = {z}");
        }
    }

    #[test]
    fn trigonometric_integrals() {
        let cases = [
            (0.5, 0.493_107_418_043_066_7, -0.177_784_078_806_612_9),
            (1.0, 0.946_083_070_367_183_0, 0.337_403_922_900_968_1),
            (5.0, 1.549_931_244_944_674_1, -0.190_029_749_656_643_9),
            (10.0, 1.658_347_594_218_874_0, -0.045_456_433_004_455_4),
        ];
        for (x, si, ci) in cases {
            let (c, s) = cisi(x);
            assert!((s - si).abs() < 1e-14, "Si({x}) = {s}");
            assert!((c - ci).abs() < 1e-14, "Ci({x}) = {c}");
        }
    }

    #[test]
    fn cube_density_shape() {
        let g1 = cube_normal_density(1.0);
        assert!((g1 - (-0.5f64).exp() / (3.0 * (2.0 * PI).sqrt())).abs() < 1e-16);
        assert_eq!(cube_normal_density(-2.5), cube_normal_density(2.5));
    }
}
