//! The characteristic function `phi(t) = E exp(i t X^3)` of a cubed standard
//! normal, its derivatives, and the expansion of `phi^n` in powers of
//! `t^(-1/3)`.
//!
//! `phi` is real and even. Three independent evaluators are provided:
//! quadrature, the convergent expansion in `t^(-1/3)`, and the Airy relation.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::quad::{integrate, QuadOptions};
use super::special::{airy_ai, multifactorial, AIRY_MAX_ARG, GAMMA_ONE_THIRD, GAMMA_TWO_THIRDS};
use super::NumericError;
use crate::algebra::{rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiEvaluator {
    /// Below this `|t|` use quadrature, above it the expansion.
    pub t_switch: f64,
    /// Maximum number of terms per expansion series.
    pub k_terms: usize,
    pub abs_tol: f64,
}

impl Default for PhiEvaluator {
    fn default() -> Self {
        Self {
            t_switch: 8.0,
            k_terms: 30,
            abs_tol: 1e-15,
        }
    }
}

impl PhiEvaluator {
    pub fn eval(&self, t: f64) -> Result<f64, NumericError> {
        if t.abs() < self.t_switch {
            phi_quadrature(t)
        } else {
            phi_asymptotic(t, self.k_terms)
        }
    }

    /// Whether the last retained term of each series is below `abs_tol` at `t`.
    pub fn truncation_ok(&self, t: f64) -> bool {
        let (ca, cb) = lead_constants();
        let k = self.k_terms as i64 - 1;
        let (u, v) = series_coeffs(k);
        let a = t.abs();
        let p = a.powi(-2 * k as i32);
        (ca * u * p * a.powf(-1.0 / 3.0)).abs() < self.abs_tol && (cb * v * p * a.powf(-5.0 / 3.0)).abs() < self.abs_tol
    }

    /// Expansion of `phi^n` carrying `k_terms` terms of each series of `phi`.
    pub fn expansion(&self, n: usize) -> PhiPowerExpansion {
        PhiPowerExpansion::new(n, self.k_terms)
    }
}

/// Series terms kept in the cache; later terms underflow for `t >= 1`.
const MAX_TERMS: usize = 64;

/// `(6k-5)!6 / ((6k)!6 (6k-4)!6) 3^(-2k)` and `(6k-1)!6 / ((6k)!6 (6k+4)!6) 3^(-2k)`,
/// computed exactly and rounded once.
fn exact_series_coeffs(k: i64) -> (f64, f64) {
    let m = |v: i64| multifactorial(v, 6);
    let nine = Rational::from_integer(9.into()).pow(k as i32);
    let a = m(6 * k - 5) / (m(6 * k) * m(6 * k - 4) * &nine);
    let b = m(6 * k - 1) / (m(6 * k) * m(6 * k + 4) * &nine);
    (rational_to_f64(&a), rational_to_f64(&b))
}

fn series_coeffs(k: i64) -> (f64, f64) {
    static CACHE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    let c = CACHE.get_or_init(|| (0..MAX_TERMS as i64).map(exact_series_coeffs).collect());
    c.get(k as usize).copied().unwrap_or((0.0, 0.0))
}

fn lead_constants() -> (f64, f64) {
    let s = (2.0 * PI).sqrt();
    (s / (3.0 * GAMMA_TWO_THIRDS), s / (9.0 * GAMMA_ONE_THIRD))
}

/// Both expansion series of `phi` summed to `k_terms` terms each.
pub fn phi_asymptotic(t: f64, k_terms: usize) -> Result<f64, NumericError> {
    if t == 0.0 {
        return Err(NumericError::Domain("the expansion of phi is at infinity; t = 0 is excluded".into()));
    }
    let a = t.abs();
    let (ca, cb) = lead_constants();
    let (mut s1, mut s2) = (0.0, 0.0);
    for k in 0..k_terms as i64 {
        let (u, v) = series_coeffs(k);
        let p = a.powi(-2 * k as i32);
        s1 += u * p;
        s2 += v * p;
    }
    Ok(ca * a.powf(-1.0 / 3.0) * s1 - cb * a.powf(-5.0 / 3.0) * s2)
}

/// `phi` through `Ai`, valid while the Airy argument stays in the series
/// range (about `t > 0.2`).
pub fn airy_phi(t: f64) -> Result<f64, NumericError> {
    if t == 0.0 {
        return Err(NumericError::Domain("airy_phi needs t != 0".into()));
    }
    let a = t.abs();
    let z = a.powf(-4.0 / 3.0) / (4.0 * 3f64.powf(4.0 / 3.0));
    let (ai, _) = airy_ai(z).ok_or_else(|| {
        NumericError::Domain(format!("Airy argument {z:.3e} exceeds the series range {AIRY_MAX_ARG}"))
    })?;
    Ok((2.0 * PI).sqrt() / 3f64.cbrt() * a.powf(-1.0 / 3.0) * (a.powi(-2) / 108.0).exp() * ai)
}

/// `phi(t)` by quadrature.
pub fn phi_quadrature(t: f64) -> Result<f64, NumericError> {
    phi_quadrature_deriv(t, 0)
}

/// `phi^(k)(t)` by quadrature along the ray `x = r e^(i pi/6)`, on which
/// `i t x^3 = -t r^3` and the integrand no longer oscillates:
/// `phi^(k)(t) = sqrt(2/pi) Re[e^(i pi/6) int_0^inf (-r^3)^k exp(-r^2 e^(i pi/3)/2 - t r^3) dr]`
/// for `t >= 0`.
pub fn phi_quadrature_deriv(t: f64, k: u32) -> Result<f64, NumericError> {
    let sign = if t < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let a = t.abs();
    let w = Complex64::from_polar(1.0, PI / 6.0);
    let w2 = w * w;
    // exp(-r^2/4) r^(3k) is below 1e-30 of its peak well before this
    let upper = 2.0 * (70.0 + 6.0 * k as f64 * (1.0 + 6.0 * k as f64).ln()).sqrt() + (6.0 * k as f64).sqrt();
    let opts = QuadOptions {
        abs_tol: 1e-14,
        rel_tol: 1e-14,
        max_intervals: 4000,
    };
    let r = integrate(
        |r| {
            let p = (-r * r * r).powi(k as i32);
            (-0.5 * r * r * w2 - a * r * r * r).exp() * p
        },
        0.0,
        upper,
        &opts,
    )?;
    Ok(sign * (2.0 / PI).sqrt() * (w * r.value).re)
}

/// `phi^n(t) = sum_e c_e t^(-e/3)` for `t > 0`, truncated consistently:
/// every exponent below the first one affected by the truncation of `phi`
/// is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiPowerExpansion {
    pub n: usize,
    /// `coeffs[e]` multiplies `t^(-e/3)`.
    pub coeffs: Vec<f64>,
}

impl PhiPowerExpansion {
    pub fn new(n: usize, k_terms: usize) -> Self {
        assert!(n >= 1 && k_terms >= 1);
        let (ca, cb) = lead_constants();
        let len = 6 * k_terms + 1;
        let mut base = vec![0.0; len];
        for k in 0..k_terms {
            let (u, v) = series_coeffs(k as i64);
            base[1 + 6 * k] = ca * u;
            if 5 + 6 * k < len {
                base[5 + 6 * k] = -cb * v;
            }
        }
        // first exponent of phi^n touched by the dropped terms
        let cut = 6 * k_terms + n;
        let mut acc = base.clone();
        for _ in 1..n {
            let mut next = vec![0.0; cut];
            for (i, x) in acc.iter().enumerate().filter(|(_, x)| **x != 0.0) {
                for (j, y) in base.iter().enumerate().filter(|(_, y)| **y != 0.0) {
                    if i + j < cut {
                        next[i + j] += x * y;
                    }
                }
            }
            acc = next;
        }
        acc.truncate(cut);
        Self { n, coeffs: acc }
    }

    /// Nonzero terms as `(e, c_e)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|(_, c)| *c != 0.0)
    }

    /// `d^j/dt^j phi^n` at `t > 0`, term by term.
    pub fn eval_deriv(&self, t: f64, j: usize) -> f64 {
        self.terms()
            .map(|(e, c)| {
                let a = -(e as f64) / 3.0;
                let fall: f64 = (0..j).map(|i| a - i as f64).product();
                c * fall * t.powf(a - j as f64)
            })
            .sum()
    }
}
