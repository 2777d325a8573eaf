//! Density of the sum of `n` independent Uniform(0, 1) variables as a
//! piecewise polynomial `f(x) = sum_{j <= floor(x)} c_j (x - j)^(n-1)`
//! on `[0, n]`, zero elsewhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::{rational_to_f64, solve_exact, GaussianRational, Polynomial, Rational};
use crate::weyl::serial::{int_value, value_int};

use super::StatsError;

/// Largest `n` accepted when decoding JSON.
pub const MAX_JSON_N: usize = 4096;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewisePolyDensity {
    pub n: usize,
    pub c: Vec<Rational>,
}

/// Solves for `c` from `f^(r)(n) = 0` for `r <= n-2` and unit mass:
/// row `r` has entries `(n - j)^(n - r)`, right-hand side `(n, 0, ..., 0)`.
pub fn irwin_hall_density(n: usize) -> Result<PiecewisePolyDensity, StatsError> {
    if n == 0 {
        return Err(StatsError::ZeroN);
    }
    let m: Vec<Vec<GaussianRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|j| GaussianRational::real(Rational::from_integer(BigInt::from(n - j).pow((n - r) as u32))))
                .collect()
        })
        .collect();
    let mut rhs = vec![GaussianRational::zero(); n];
    rhs[0] = GaussianRational::from_int(n as i64);
    let c = solve_exact(&m, &rhs)?.into_iter().map(|v| v.re).collect();
    Ok(PiecewisePolyDensity { n, c })
}

impl PiecewisePolyDensity {
    /// Polynomial on `[k, k+1]`.
    pub fn piece(&self, k: usize) -> Polynomial {
        let e = (self.n - 1) as u32;
        self.c[..=k.min(self.n - 1)]
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (j, cj)| {
                let shift = Polynomial::linear_root(&GaussianRational::from_int(j as i64)).pow(e);
                &acc + &shift.scale(&GaussianRational::real(cj.clone()))
            })
    }

    pub fn pieces(&self) -> Vec<Polynomial> {
        (0..self.n).map(|k| self.piece(k)).collect()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_derivs(x, 0)[0]
    }

    /// `[f(x), f'(x), ..., f^(m)(x)]`, using the symmetry `f(x) = f(n - x)`
    /// to stay on the left half where the sum does not cancel.
    pub fn eval_derivs(&self, x: f64, m: usize) -> Vec<f64> {
        let n = self.n as f64;
        let mut out = vec![0.0; m + 1];
        if !(0.0..=n).contains(&x) {
            return out;
        }
        let (y, flip) = if x > n / 2.0 { (n - x, true) } else { (x, false) };
        let c: Vec<f64> = self.c.iter().map(rational_to_f64).collect();
        let top = (y.floor() as usize).min(self.n - 1);
        let e = self.n as i64 - 1;
        for (k, o) in out.iter_mut().enumerate() {
            let k = k as i64;
            if k > e {
                break;
            }
            // falling factorial (n-1)_k
            let ff: f64 = (0..k).map(|i| (e - i) as f64).product();
            let s: f64 = (0..=top).map(|j| c[j] * (y - j as f64).powi((e - k) as i32)).sum();
            let sign = if flip && k % 2 == 1 { -1.0 } else { 1.0 };
            *o = sign * ff * s;
        }
        out
    }

    /// Exact `integral_0^n f`.
    pub fn integral(&self) -> Rational {
        let n = self.n;
        let total = self.c.iter().enumerate().fold(Rational::zero(), |acc, (j, cj)| {
            acc + cj * Rational::from_integer(BigInt::from(n - j).pow(n as u32))
        });
        total / Rational::from_integer(BigInt::from(n))
    }

    /// Whether derivatives of order `0..=n-2` agree across every breakpoint
    /// `0, 1, ..., n`, with zero outside `[0, n]`. Exact.
    pub fn is_smooth(&self) -> bool {
        let n = self.n;
        let mut left: Vec<Polynomial> = Vec::with_capacity(n + 1);
        left.push(Polynomial::zero());
        left.extend(self.pieces());
        left.push(Polynomial::zero());
        (0..=n).all(|b| {
            let x = GaussianRational::from_int(b as i64);
            let (mut p, mut q) = (left[b].clone(), left[b + 1].clone());
            for _ in 0..n.saturating_sub(1) {
                if p.eval(&x) != q.eval(&x) {
                    return false;
                }
                p = p.derivative();
                q = q.derivative();
            }
            true
        })
    }

    pub fn to_value(&self) -> Value {
        let c: Vec<Value> = self
            .c
            .iter()
            .map(|q| Value::Array(vec![int_value(q.numer()), int_value(q.denom())]))
            .collect();
        json!({ "n": self.n, "c": c })
    }

    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    pub fn from_value(v: &Value) -> Result<Self, StatsError> {
        let bad = |m: &str| StatsError::Format(m.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("n must be a nonnegative integer"))? as usize;
        if n == 0 || n > MAX_JSON_N {
            return Err(bad("n out of range"));
        }
        let arr = obj
            .get("c")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("c must be an array"))?;
        if arr.len() != n {
            return Err(StatsError::Format(format!("c has {} entries, expected {n}", arr.len())));
        }
        let c = arr
            .iter()
            .map(|e| {
                let pair = e
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| bad("each c entry must be [num, den]"))?;
                let num = value_int(&pair[0]).map_err(|e| StatsError::Format(e.to_string()))?;
                let den = value_int(&pair[1]).map_err(|e| StatsError::Format(e.to_string()))?;
                if den.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Rational::new(num, den))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { n, c })
    }

    pub fn from_json(s: &str) -> Result<Self, StatsError> {
        let v: Value = serde_json::from_str(s).map_err(|e| StatsError::Format(e.to_string()))?;
        Self::from_value(&v)
    }

    /// `c_j = (-1)^j C(n, j) / (n-1)!`, the classical closed form.
    pub fn closed_form(n: usize) -> Vec<Rational> {
        let fact: BigInt = (1..n).map(BigInt::from).product::<BigInt>().max(BigInt::one());
        (0..n)
            .map(|j| {
                let b = crate::algebra::binomial(n as u64, j as u64);
                let v = Rational::new(b, fact.clone());
                if j % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }
}
