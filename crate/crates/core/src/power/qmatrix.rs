//! The matrix `Q(x)` and the operator annihilating `f^n`.
//!
//! Row `i` of column `j` holds the coefficient of `f^(n-i) (f')^i` in
//! `Dx^j f^n`, reduced with the seed equation. A kernel vector `v` of `Q`
//! gives `sum_j v_j Dx^j f^n = 0`.

use std::fmt;

use crate::algebra::{falling_factorial, GaussianRational, Polynomial, Rational, RationalFunction};
use crate::weyl::DiffOperator;

use super::{PowerError, PowerOptions, SecondOrderSeed};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    pub n: usize,
    /// `entries[i][j]`, `0 <= i <= n`, `0 <= j <= n + 1`.
    pub entries: Vec<Vec<RationalFunction>>,
}

impl QMatrix {
    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i][j]
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}", cells.join(" | "))?;
        }
        Ok(())
    }
}

fn int_rf(k: i64) -> RationalFunction {
    RationalFunction::from_int(k)
}

/// `q_{i,j+1} = (n+1-i) q_{i-1,j} + q_{ij}' + i a1 q_{ij} + (i+1) a0 q_{i+1,j}`,
/// starting from `e_0`.
pub fn build_q(seed: &SecondOrderSeed, n: usize) -> QMatrix {
    let zero = RationalFunction::zero();
    let mut cols: Vec<Vec<RationalFunction>> = Vec::with_capacity(n + 2);
    let mut col0 = vec![zero.clone(); n + 1];
    col0[0] = RationalFunction::one();
    cols.push(col0);
    for j in 0..=n {
        let prev = &cols[j];
        let next: Vec<RationalFunction> = (0..=n)
            .map(|i| {
                let mut acc = prev[i].derivative();
                if i > 0 && !prev[i - 1].is_zero() {
                    acc = &acc + &(&int_rf((n + 1 - i) as i64) * &prev[i - 1]);
                }
                if i > 0 && !prev[i].is_zero() {
                    acc = &acc + &(&(&int_rf(i as i64) * &seed.a1) * &prev[i]);
                }
                if i < n && !prev[i + 1].is_zero() {
                    acc = &acc + &(&(&int_rf((i + 1) as i64) * &seed.a0) * &prev[i + 1]);
                }
                acc
            })
            .collect();
        cols.push(next);
    }
    let entries = (0..=n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    QMatrix { n, entries }
}

/// Back-substitution on the upper-triangular `Q` with `v_{n+1} = 1`; the
/// diagonal is `q_ii = [n]_i`.
pub fn kernel_vector(q: &QMatrix) -> Vec<RationalFunction> {
    let n = q.n;
    let mut v = vec![RationalFunction::zero(); n + 2];
    v[n + 1] = RationalFunction::one();
    for i in (0..=n).rev() {
        let mut s = RationalFunction::zero();
        for (j, vj) in v.iter().enumerate().skip(i + 1) {
            let qij = q.get(i, j);
            if !qij.is_zero() && !vj.is_zero() {
                s = &s + &(qij * vj);
            }
        }
        let d = GaussianRational::real(Rational::from_integer(falling_factorial(n as i64, i as u32)));
        v[i] = s.scale(&-d.inv().expect("[n]_i is nonzero for i <= n"));
    }
    v
}

#[derive(Clone, PartialEq, Debug)]
pub struct PowerODE {
    pub n: usize,
    /// Coprime polynomial coefficients `v_0, ..., v_{n+1}` of the canonical
    /// operator.
    pub kernel: Vec<Polynomial>,
    pub operator: DiffOperator,
    pub seed: SecondOrderSeed,
}

impl PowerODE {
    pub fn max_kernel_degree(&self) -> usize {
        self.kernel.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

/// The `(n+1)`-th order operator annihilating `f^n`, canonicalized, with the
/// default power cap.
pub fn power_operator(seed: &SecondOrderSeed, n: usize) -> Result<PowerODE, PowerError> {
    power_operator_with(seed, n, &PowerOptions::default())
}

pub fn power_operator_with(
    seed: &SecondOrderSeed,
    n: usize,
    opts: &PowerOptions,
) -> Result<PowerODE, PowerError> {
    opts.check(n)?;
    let q = build_q(seed, n);
    let v = kernel_vector(&q);
    let operator = DiffOperator::new(v)?.canonical();
    let kernel = operator.coeffs().iter().map(|c| c.num().clone()).collect();
    Ok(PowerODE {
        n,
        kernel,
        operator,
        seed: seed.clone(),
    })
}

/// `[n]_i` as a rational function, for checks against the diagonal.
pub fn diagonal_value(n: usize, i: usize) -> RationalFunction {
    RationalFunction::constant(GaussianRational::real(Rational::from_integer(
        falling_factorial(n as i64, i as u32),
    )))
}
