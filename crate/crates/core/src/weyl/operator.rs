//! `sum_k c_k(x) Dx^k` with rational-function coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::algebra::{GaussianRational, Polynomial, Rational, RationalFunction};

use super::{WeylElement, WeylError};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiffOperator {
    coeffs: Vec<RationalFunction>,
}

impl DiffOperator {
    /// `coeffs[k]` multiplies `Dx^k`. Trailing zero coefficients are
    /// dropped; an all-zero list is rejected.
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Result<Self, WeylError> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(WeylError::ZeroOperator);
        }
        Ok(Self { coeffs })
    }

    pub fn from_polys(coeffs: Vec<Polynomial>) -> Result<Self, WeylError> {
        Self::new(coeffs.into_iter().map(RationalFunction::from_poly).collect())
    }

    /// Operator with coefficients read off a normal-form Weyl element.
    pub fn from_weyl(w: &WeylElement) -> Result<Self, WeylError> {
        let r = w.order().ok_or(WeylError::ZeroOperator)?;
        Self::from_polys((0..=r).map(|b| w.coeff_poly(b)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs.get(k).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn leading(&self) -> &RationalFunction {
        self.coeffs.last().unwrap()
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_polynomial())
    }

    /// Coefficients multiplied through by the common denominator and divided
    /// by their polynomial gcd: coprime polynomials spanning the same
    /// operator up to a rational-function factor.
    pub fn primitive_polys(&self) -> Vec<Polynomial> {
        let den = self
            .coeffs
            .iter()
            .fold(Polynomial::one(), |acc, c| {
                let g = acc.gcd(c.den());
                &acc * &c.den().div_exact(&g)
            });
        let polys: Vec<Polynomial> = self
            .coeffs
            .iter()
            .map(|c| c.num() * &den.div_exact(c.den()))
            .collect();
        let g = polys
            .iter()
            .fold(Polynomial::zero(), |acc, p| acc.gcd(p));
        polys.into_iter().map(|p| p.div_exact(&g)).collect()
    }

    /// The primitive polynomial form as a Weyl element.
    pub fn to_weyl(&self) -> WeylElement {
        self.primitive_polys()
            .iter()
            .enumerate()
            .fold(WeylElement::zero(), |acc, (b, p)| {
                &acc + &WeylElement::from_poly_coeff(p, b as u32)
            })
    }

    /// Canonical representative of the class `{ r * self : r a nonzero
    /// rational function }`: coprime polynomial coefficients with Gaussian
    /// integer coefficients of unit content, and a positive integer as the
    /// top coefficient of the top-order polynomial.
    pub fn canonical(&self) -> Self {
        Self::from_weyl(&self.to_weyl().canonical()).expect("nonzero operator")
    }

    /// Equality up to a nonzero rational-function factor.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// The operator in the variable `y = x - x0`: coefficients `c_k(y + x0)`.
    pub fn translate(&self, x0: &GaussianRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.translate(x0)).collect(),
        }
    }

    pub fn scale(&self, s: &RationalFunction) -> Result<Self, WeylError> {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact application to a rational function.
    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        let mut out = RationalFunction::zero();
        let mut d = f.clone();
        for c in &self.coeffs {
            out = &out + &(c * &d);
            d = d.derivative();
        }
        out
    }

    /// Floating evaluation of `sum_k c_k(x) derivs[k]`.
    pub fn residual(&self, x: Complex64, derivs: &[Complex64]) -> Result<Complex64, WeylError> {
        if derivs.len() < self.coeffs.len() {
            return Err(WeylError::ShortDerivativeStack {
                order: self.order(),
                got: derivs.len(),
            });
        }
        let mut acc = Complex64::zero();
        for (k, (c, d)) in self.coeffs.iter().zip(derivs).enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.eval_complex(x).ok_or(WeylError::Pole { index: k, x })?;
            acc += v * d;
        }
        Ok(acc)
    }

    /// Floating coefficient values at `x`, lowest order first.
    pub fn coeffs_at(&self, x: Complex64) -> Result<Vec<Complex64>, WeylError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.eval_complex(x).ok_or(WeylError::Pole { index: k, x }))
            .collect()
    }

    /// Multiply every coefficient by the integer `k`.
    pub fn scale_int(&self, k: i64) -> Result<Self, WeylError> {
        self.scale(&RationalFunction::constant(GaussianRational::real(
            Rational::from_integer(BigInt::from(k)),
        )))
    }
}

/// `residual_eval`: `sum_k c_k(x) derivs[k]` in floating point.
pub fn residual_eval(op: &DiffOperator, x: Complex64, derivs: &[Complex64]) -> Result<Complex64, WeylError> {
    op.residual(x, derivs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational_function;

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s).unwrap()
    }

    #[test]
    fn rejects_zero_and_trims() {
        assert_eq!(DiffOperator::new(vec![]), Err(WeylError::ZeroOperator));
        assert_eq!(
            DiffOperator::new(vec![RationalFunction::zero()]),
            Err(WeylError::ZeroOperator)
        );
        let op = DiffOperator::new(vec![rf("x"), rf("1"), RationalFunction::zero()]).unwrap();
        assert_eq!(op.order(), 1);
    }

    #[test]
    fn residual_of_sine() {
        let op = DiffOperator::new(vec![rf("1"), rf("0"), rf("1")]).unwrap();
        let x = 0.3f64;
        let r = residual_eval(
            &op,
            Complex64::new(x, 0.0),
            &[x.sin(), x.cos(), -x.sin()].map(|v| Complex64::new(v, 0.0)),
        )
        .unwrap();
        assert!(r.norm() < 1e-15);
    }

    #[test]
    fn residual_of_sine_squared() {
        // sin^2 = (1 - cos 2x)/2
        let op = DiffOperator::new(vec![rf("0"), rf("4"), rf("0"), rf("1")]).unwrap();
        let x = 1.1f64;
        let d = [
            x.sin().powi(2),
            (2.0 * x).sin(),
            2.0 * (2.0 * x).cos(),
            -4.0 * (2.0 * x).sin(),
        ]
        .map(|v| Complex64::new(v, 0.0));
        assert!(op.residual(Complex64::new(x, 0.0), &d).unwrap().norm() < 1e-14);
        assert!(matches!(
            op.residual(Complex64::new(x, 0.0), &d[..3]),
            Err(WeylError::ShortDerivativeStack { order: 3, got: 3 })
        ));
    }

    #[test]
    fn pole_is_reported() {
        let op = DiffOperator::new(vec![rf("1/x"), rf("1")]).unwrap();
        assert!(matches!(
            op.residual(Complex64::zero(), &[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]),
            Err(WeylError::Pole { index: 0, .. })
        ));
    }

    #[test]
    fn canonical_clears_denominators() {
        // x^-1 Dx^2 - 2 x^-3 ~ x^2 Dx^2 - 2
        let a = DiffOperator::new(vec![rf("-2*x^-3"), rf("0"), rf("x^-1")]).unwrap();
        let b = DiffOperator::new(vec![rf("-6"), rf("0"), rf("3*x^2")]).unwrap();
        assert!(a.equivalent(&b));
        let c = a.canonical();
        assert_eq!(c.coeff(2), rf("x^2"));
        assert_eq!(c.coeff(0), rf("-2"));
    }

    #[test]
    fn apply_to_monomial() {
        // (x^2 Dx^2 - 2) x^2 = 2x^2 - 2x^2 = 0
        let op = DiffOperator::new(vec![rf("-2"), rf("0"), rf("x^2")]).unwrap();
        assert!(op.apply(&rf("x^2")).is_zero());
        assert_eq!(op.apply(&rf("x")), rf("-2*x"));
    }
}
