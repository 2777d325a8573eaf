//! Laurent polynomials `sum_{k=m}^{M} c_k x^k` with `m` possibly negative.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::scalar::GaussianRational;

/// Degree bounds of a Laurent polynomial. The zero polynomial has
/// `mindeg = +inf` and `maxdeg = -inf`, represented by [`DegreeBounds::Zero`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBounds {
    Zero,
    Finite { mindeg: i64, maxdeg: i64 },
}

impl DegreeBounds {
    /// `mindeg` with `None` meaning `+inf`.
    pub fn mindeg(&self) -> Option<i64> {
        match self {
            DegreeBounds::Zero => None,
            DegreeBounds::Finite { mindeg, .. } => Some(*mindeg),
        }
    }

    /// `maxdeg` with `None` meaning `-inf`.
    pub fn maxdeg(&self) -> Option<i64> {
        match self {
            DegreeBounds::Zero => None,
            DegreeBounds::Finite { maxdeg, .. } => Some(*maxdeg),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPolynomial {
    /// Exponent of `coeffs[0]`.
    mindeg: i64,
    coeffs: Vec<GaussianRational>,
}

impl LaurentPolynomial {
    pub fn new(mindeg: i64, coeffs: Vec<GaussianRational>) -> Self {
        let mut out = Self { mindeg, coeffs };
        out.normalize();
        out
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussianRational)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![GaussianRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += &c;
        }
        Self::new(lo, coeffs)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: GaussianRational, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.mindeg += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.mindeg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn bounds(&self) -> DegreeBounds {
        if self.is_zero() {
            DegreeBounds::Zero
        } else {
            DegreeBounds::Finite {
                mindeg: self.mindeg,
                maxdeg: self.mindeg + self.coeffs.len() as i64 - 1,
            }
        }
    }

    pub fn coeff(&self, k: i64) -> GaussianRational {
        let idx = k - self.mindeg;
        if idx < 0 {
            return GaussianRational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.mindeg + k as i64, c))
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(e, _)| *e != 0)
                .map(|(e, c)| (e - 1, c * GaussianRational::from_int(e))),
        )
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.mindeg, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Split as `x^shift * p(x)` with `p` an ordinary polynomial and
    /// `shift = min(mindeg, 0)`.
    pub fn to_shifted_polynomial(&self) -> (i64, Polynomial) {
        if self.is_zero() {
            return (0, Polynomial::zero());
        }
        let shift = self.mindeg.min(0);
        let pad = (self.mindeg - shift) as usize;
        let mut coeffs = vec![GaussianRational::zero(); pad];
        coeffs.extend(self.coeffs.iter().cloned());
        (shift, Polynomial::new(coeffs))
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let (shift, p) = self.to_shifted_polynomial();
        let den = Polynomial::monomial(GaussianRational::from_int(1), (-shift) as usize);
        RationalFunction::new(p, den)
    }
}

impl From<&Polynomial> for LaurentPolynomial {
    fn from(p: &Polynomial) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }
}

impl<'a, 'b> Add<&'b LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.terms()
                .chain(rhs.terms())
                .map(|(e, c)| (e, c.clone())),
        )
    }
}

impl<'a> Neg for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&-GaussianRational::from_int(1))
    }
}

impl<'a, 'b> Sub<&'b LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        LaurentPolynomial::new(self.mindeg + rhs.mindeg, coeffs)
    }
}

/// `laurent_bounds`: exact `(mindeg, maxdeg)`.
pub fn laurent_bounds(p: &LaurentPolynomial) -> DegreeBounds {
    p.bounds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn bounds_of_seed_coefficients() {
        // 1 + x^-2
        let a0 = LaurentPolynomial::from_terms([(0, g(1)), (-2, g(1))]);
        assert_eq!(a0.bounds(), DegreeBounds::Finite { mindeg: -2, maxdeg: 0 });
        assert_eq!(LaurentPolynomial::zero().bounds(), DegreeBounds::Zero);
        assert_eq!(DegreeBounds::Zero.mindeg(), None);
        // -3x^-1 - (1/27)x^-3
        let a1 = LaurentPolynomial::from_terms([
            (-1, g(-3)),
            (-3, GaussianRational::real(rat(-1, 27))),
        ]);
        assert_eq!(a1.bounds(), DegreeBounds::Finite { mindeg: -3, maxdeg: -1 });
    }

    #[test]
    fn cancellation_renormalizes() {
        let p = LaurentPolynomial::from_terms([(-2, g(1)), (1, g(3))]);
        let q = LaurentPolynomial::from_terms([(-2, g(-1)), (0, g(5))]);
        let s = &p + &q;
        assert_eq!(s.bounds(), DegreeBounds::Finite { mindeg: 0, maxdeg: 1 });
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_and_rational_function() {
        let p = LaurentPolynomial::from_terms([(-2, g(3)), (0, g(7)), (2, g(1))]);
        let d = p.derivative();
        assert_eq!(d, LaurentPolynomial::from_terms([(-3, g(-6)), (1, g(2))]));
        assert_eq!(p.to_rational_function().derivative(), d.to_rational_function());
    }
}
