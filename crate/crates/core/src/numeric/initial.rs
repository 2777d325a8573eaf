//! Derivatives `f_n^(k)(x0)` of the density of a sum of `n` cubed standard
//! normals, by inverting `phi^n`.
//!
//! The inversion integral is split at `T`: quadrature on `[0, T]`, `m`
//! integrations by parts at `T`, and the remaining tail expressed through
//! `J_l` with `T' = T x0`.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::jvals::j_values;
use super::phi::PhiEvaluator;
use super::quad::{integrate, QuadOptions};
use super::NumericError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialValueJob {
    pub n: usize,
    pub x0: f64,
    /// Number of integrations by parts at `T`.
    pub m: usize,
    pub t: f64,
    pub k_max: usize,
}

impl InitialValueJob {
    /// Defaults `T = 10`, `m = max(6, 3n)`, `k_max = 3n - 1` (the full
    /// derivative stack of the order-`3n` density equation).
    pub fn new(n: usize, x0: f64) -> Self {
        Self {
            n,
            x0,
            m: (3 * n).max(6),
            t: 10.0,
            k_max: (3 * n).saturating_sub(1),
        }
    }

    pub fn validate(&self) -> Result<(), NumericError> {
        if self.n == 0 {
            return Err(NumericError::Domain("n must be at least 1".into()));
        }
        if self.x0 == 0.0 || !self.x0.is_finite() {
            return Err(NumericError::SingularPoint(self.x0));
        }
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(NumericError::Domain(format!("T must be positive, got {}", self.t)));
        }
        // k < m + n/3
        if 3 * self.k_max >= 3 * self.m + self.n {
            return Err(NumericError::Validity {
                k_max: self.k_max,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }
}

fn binom(k: usize, l: usize) -> f64 {
    (0..l).fold(1.0, |acc, i| acc * (k - i) as f64 / (i + 1) as f64)
}

/// Rising factorial `(a)_l`.
fn rising(a: usize, l: usize) -> f64 {
    (0..l).map(|i| (a + i) as f64).product()
}

/// `[f_n(x0), f_n'(x0), ..., f_n^(k_max)(x0)]`.
pub fn initial_values(job: &InitialValueJob, phi: &PhiEvaluator) -> Result<Vec<f64>, NumericError> {
    job.validate()?;
    let (n, m, t_cut, k_max) = (job.n, job.m, job.t, job.k_max);
    // f_n is even, so f^(k)(-x) = (-1)^k f^(k)(x)
    let x = job.x0.abs();
    let flip = job.x0 < 0.0;
    let i = Complex64::i();

    let mut memo: HashMap<u64, f64> = HashMap::new();
    let mut phi_n = |t: f64| -> Result<f64, NumericError> {
        if let Some(v) = memo.get(&t.to_bits()) {
            return Ok(*v);
        }
        let v = phi.eval(t)?.powi(n as i32);
        memo.insert(t.to_bits(), v);
        Ok(v)
    };

    let expansion = phi.expansion(n);
    let d_at_t: Vec<f64> = (0..=m).map(|j| expansion.eval_deriv(t_cut, j)).collect();
    let tp = t_cut * x;
    let gamma_max = expansion.coeffs.len() + 3 * (m + k_max);
    let jv = j_values(tp, gamma_max)?;
    let e_it = Complex64::new(0.0, t_cut * x).exp();

    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut err = None;
        let opts = QuadOptions {
            abs_tol: 1e-13,
            rel_tol: 1e-13,
            max_intervals: 4000,
        };
        let head = integrate(
            |t| match phi_n(t) {
                Ok(p) => (i * t).powu(k as u32) * p * Complex64::new(0.0, x * t).exp(),
                Err(e) => {
                    err.get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            },
            0.0,
            t_cut,
            &opts,
        )?;
        if let Some(e) = err {
            return Err(e);
        }

        let mut boundary = Complex64::new(0.0, 0.0);
        for j in 1..=m {
            let mut s = Complex64::new(0.0, 0.0);
            for l in 0..=k {
                s += i.powu((k + j + l) as u32) * (binom(k, l) * rising(j, l) * t_cut.powi((k - l) as i32) / x.powi((j + l) as i32));
            }
            boundary += s * d_at_t[j - 1];
        }
        boundary *= e_it;

        let mut tail = Complex64::new(0.0, 0.0);
        for l in 0..=k {
            // int_T^inf t^(k-l) phi_n^(m)(t) e^(ixt) dt, term by term
            let mut integral = Complex64::new(0.0, 0.0);
            for (e, c) in expansion.terms() {
                let a = -(e as f64) / 3.0;
                let fall: f64 = (0..m).map(|q| a - q as f64).product();
                let gamma = e + 3 * (m + l - k);
                integral += jv[gamma - 1] * (c * fall * x.powf(gamma as f64 / 3.0 - 1.0));
            }
            tail += integral * i.powu((m + k + l) as u32) * (binom(k, l) * rising(m, l) / x.powi((m + l) as i32));
        }

        let v = (head.value + boundary + tail).re / PI;
        out.push(if flip && k % 2 == 1 { -v } else { v });
    }
    Ok(out)
}
