//! Euler-operator form `sum_a x^a q_a(theta)` with `theta = x Dx`, using
//! `x^k Dx^k = [theta]_k`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::text::render_polynomial;
use crate::algebra::{GaussianRational, LaurentPolynomial, Polynomial, Rational, RationalFunction};

use super::{DiffOperator, WeylElement, WeylError};

/// `q_a` is stored as a polynomial in `lambda` (standing for `theta`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ThetaForm {
    terms: BTreeMap<i64, Polynomial>,
}

/// `[lambda]_k = lambda (lambda - 1) ... (lambda - k + 1)`.
pub fn falling_poly(k: u32) -> Polynomial {
    (0..k as i64).fold(Polynomial::one(), |acc, j| {
        &acc * &Polynomial::linear_root(&GaussianRational::from_int(j))
    })
}

/// Coefficients `d_k` with `q(lambda) = sum_k d_k [lambda]_k`, from the
/// forward differences of `q` at `0, 1, ..., deg q`.
fn falling_basis(q: &Polynomial) -> Vec<GaussianRational> {
    let Some(deg) = q.degree() else {
        return Vec::new();
    };
    let mut vals: Vec<GaussianRational> = (0..=deg as i64)
        .map(|j| q.eval(&GaussianRational::from_int(j)))
        .collect();
    let mut out = Vec::with_capacity(deg + 1);
    let mut fact = BigInt::one();
    for k in 0..=deg {
        if k > 0 {
            fact *= k;
        }
        out.push(vals[0].scale(&Rational::new(BigInt::one(), fact.clone())));
        for j in 0..vals.len() - 1 {
            vals[j] = &vals[j + 1] - &vals[j];
        }
        vals.pop();
    }
    out
}

impl ThetaForm {
    pub fn from_terms<I: IntoIterator<Item = (i64, Polynomial)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (a, q) in terms {
            out.add(a, &q);
        }
        out
    }

    fn add(&mut self, a: i64, q: &Polynomial) {
        if q.is_zero() {
            return;
        }
        let e = self.terms.entry(a).or_insert_with(Polynomial::zero);
        *e = &*e + q;
        if e.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn from_weyl(w: &WeylElement) -> Self {
        let mut out = Self::default();
        for (&(a, b), c) in w.terms() {
            out.add(a as i64 - b as i64, &falling_poly(b).scale(c));
        }
        out
    }

    /// Requires every coefficient to be a Laurent polynomial.
    pub fn from_operator(op: &DiffOperator) -> Result<Self, WeylError> {
        let mut out = Self::default();
        for (k, c) in op.coeffs().iter().enumerate() {
            let l = c.to_laurent().ok_or(WeylError::NotLaurent(k))?;
            let ff = falling_poly(k as u32);
            for (j, cj) in l.terms() {
                out.add(j - k as i64, &ff.scale(cj));
            }
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Polynomial)> {
        self.terms.iter().map(|(a, q)| (*a, q))
    }

    pub fn q(&self, a: i64) -> Polynomial {
        self.terms.get(&a).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `(laurent coefficient of Dx^k)` for each `k`.
    fn laurent_coeffs(&self) -> Vec<LaurentPolynomial> {
        let mut per_k: Vec<Vec<(i64, GaussianRational)>> = Vec::new();
        for (&a, q) in &self.terms {
            for (k, d) in falling_basis(q).into_iter().enumerate() {
                if per_k.len() <= k {
                    per_k.resize(k + 1, Vec::new());
                }
                per_k[k].push((a + k as i64, d));
            }
        }
        per_k.into_iter().map(LaurentPolynomial::from_terms).collect()
    }

    /// Back to an operator with Laurent coefficients.
    pub fn to_operator(&self) -> Result<DiffOperator, WeylError> {
        DiffOperator::new(
            self.laurent_coeffs()
                .iter()
                .map(RationalFunction::from)
                .collect(),
        )
    }

    /// Back to the Weyl algebra: returns `(s, x^s * L)` with the smallest
    /// `s >= 0` that clears negative powers of `x`.
    pub fn to_weyl(&self) -> (u32, WeylElement) {
        let coeffs = self.laurent_coeffs();
        let low = coeffs
            .iter()
            .filter_map(|l| l.bounds().mindeg())
            .min()
            .unwrap_or(0);
        let shift = (-low).max(0);
        let mut w = WeylElement::zero();
        for (k, l) in coeffs.iter().enumerate() {
            for (j, c) in l.terms() {
                w.add_term((j + shift) as u32, k as u32, c);
            }
        }
        (shift as u32, w)
    }
}

impl fmt::Display for ThetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(a, q)| format!("x^{a}*({})", render_polynomial(q, "theta")))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `to_theta_form` for an operator with Laurent coefficients.
pub fn to_theta_form(op: &DiffOperator) -> Result<ThetaForm, WeylError> {
    ThetaForm::from_operator(op)
}

impl From<&WeylElement> for ThetaForm {
    fn from(w: &WeylElement) -> Self {
        ThetaForm::from_weyl(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, parse_rational_function};

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn euler_monomial() {
        let w = WeylElement::monomial(GaussianRational::one(), 2, 2);
        let t = ThetaForm::from_weyl(&w);
        assert_eq!(t, ThetaForm::from_terms([(0, poly("x^2 - x"))]));
    }

    #[test]
    fn cube_characteristic_operator() {
        // 27x^3 Dx^2 + (81x^2 + 1) Dx + 15x = 3x(3 theta + 1)(3 theta + 5) + x^-1 theta
        let op = DiffOperator::new(vec![rf("15*x"), rf("81*x^2 + 1"), rf("27*x^3")]).unwrap();
        let t = to_theta_form(&op).unwrap();
        let want = ThetaForm::from_terms([
            (1, &poly("3") * &(&poly("3*x + 1") * &poly("3*x + 5"))),
            (-1, poly("x")),
        ]);
        assert_eq!(t, want);
        assert_eq!(t.to_operator().unwrap(), op);
    }

    #[test]
    fn beta_characteristic_operator() {
        // a = 2, b = 3: Dx^2 - (i - 5/x) Dx - 2i/x
        // = x^-2 theta (theta + 4) - i x^-1 (theta + 2)
        let op = DiffOperator::new(vec![rf("-2*i*x^-1"), rf("-i + 5*x^-1"), rf("1")]).unwrap();
        let t = to_theta_form(&op).unwrap();
        let want = ThetaForm::from_terms([
            (-2, poly("x^2 + 4*x")),
            (-1, poly("-i*x - 2*i")),
        ]);
        assert_eq!(t, want);
        assert_eq!(t.to_operator().unwrap(), op);
        let (s, w) = t.to_weyl();
        assert_eq!(s, 1);
        assert_eq!(
            ThetaForm::from_weyl(&w),
            ThetaForm::from_terms([(-1, poly("x^2 + 4*x")), (0, poly("-i*x - 2*i"))])
        );
    }

    #[test]
    fn falling_basis_inverts() {
        let q = poly("7 - 3*x + 2*x^3");
        let d = falling_basis(&q);
        let back = d
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (k, c)| &acc + &falling_poly(k as u32).scale(c));
        assert_eq!(back, q);
    }

    #[test]
    fn non_laurent_rejected() {
        let op = DiffOperator::new(vec![rf("1/(x + 1)"), rf("1")]).unwrap();
        assert_eq!(to_theta_form(&op), Err(WeylError::NotLaurent(0)));
    }
}
