//! Regular singular points, indicial polynomials and exponents.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::algebra::roots::{exact_roots, numeric_roots};
use crate::algebra::{GaussianRational, Polynomial};

use super::{DiffOperator, ThetaForm, WeylElement, WeylError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point {
    Finite(GaussianRational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => write!(f, "{x}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct IndicialResult {
    pub point: Point,
    pub regular: bool,
    /// Monic indicial polynomial in `lambda`; `None` when not regular.
    pub poly: Option<Polynomial>,
    /// All exponents with multiplicity, when every one is a Gaussian
    /// rational.
    pub exponents_exact: Option<Vec<GaussianRational>>,
    pub exponents_numeric: Vec<Complex64>,
}

fn cmp_gauss(a: &GaussianRational, b: &GaussianRational) -> Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then_with(|| a.im.total_cmp(&b.im))
}

/// Indicial polynomial of `op` at `point`.
///
/// Coefficients are first cleared to coprime polynomials, and a finite point
/// `x0` is moved to the origin. With the theta form `sum_a x^a q_a(theta)`,
/// the point 0 is regular exactly when `q_{a_min}` has full degree `r`, and
/// infinity when `q_{a_max}` does; that polynomial is the indicial one. At
/// infinity its roots are reported directly as the exponents.
pub fn indicial(op: &DiffOperator, point: Point) -> Result<IndicialResult, WeylError> {
    let mut polys = op.primitive_polys();
    if polys.iter().all(|p| p.is_zero()) {
        return Err(WeylError::ZeroOperator);
    }
    if let Point::Finite(x0) = &point {
        if !x0.is_zero() {
            polys = polys.iter().map(|p| p.translate(x0)).collect();
        }
    }
    let r = polys.len() - 1;
    let w = polys
        .iter()
        .enumerate()
        .fold(WeylElement::zero(), |acc, (b, p)| {
            &acc + &WeylElement::from_poly_coeff(p, b as u32)
        });
    let theta = ThetaForm::from_weyl(&w);
    let a = match point {
        Point::Finite(_) => theta.min_power(),
        Point::Infinity => theta.max_power(),
    }
    .ok_or(WeylError::ZeroOperator)?;
    let q = theta.q(a);
    if q.degree() != Some(r) {
        return Ok(IndicialResult {
            point,
            regular: false,
            poly: None,
            exponents_exact: None,
            exponents_numeric: Vec::new(),
        });
    }
    let q = q.monic();
    let mut exact = exact_roots(&q);
    if let Some(e) = exact.as_mut() {
        e.sort_by(cmp_gauss);
    }
    let mut numeric = numeric_roots(&q);
    numeric.sort_by(cmp_complex);
    Ok(IndicialResult {
        point,
        regular: true,
        poly: Some(q),
        exponents_exact: exact,
        exponents_numeric: numeric,
    })
}

/// Whether `lambda` is an exact root of the indicial polynomial; `false` for
/// a point that is not regular singular.
pub fn exponent_check(res: &IndicialResult, lambda: &GaussianRational) -> bool {
    res.poly.as_ref().is_some_and(|p| p.eval(lambda).is_zero())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FourierSide {
    /// Exponents at 0 of `L` give exponents at infinity of `F(L)`.
    ZeroToInfinity,
    /// Exponents at infinity of `L` give exponents at 0 of `F(L)`.
    InfinityToZero,
}

/// Exponents of the Fourier-transformed operator: each `mu` becomes
/// `-mu - 1`; going from infinity to 0 the integers `0, ..., d - r - 1` are
/// appended. `d` is the degree of the leading coefficient and `r` the order.
pub fn fourier_exponents(
    exps: &[GaussianRational],
    d: i64,
    r: i64,
    side: FourierSide,
) -> Result<Vec<GaussianRational>, WeylError> {
    let one = GaussianRational::from_int(1);
    let mut out: Vec<GaussianRational> = exps.iter().map(|mu| &(-mu) - &one).collect();
    match side {
        FourierSide::ZeroToInfinity => {
            if d > r {
                return Err(WeylError::Hypothesis(format!(
                    "0 -> infinity needs d <= r, got d = {d}, r = {r}"
                )));
            }
        }
        FourierSide::InfinityToZero => {
            if d < r {
                return Err(WeylError::Hypothesis(format!(
                    "infinity -> 0 needs d >= r, got d = {d}, r = {r}"
                )));
            }
            out.extend((0..d - r).map(GaussianRational::from_int));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational_function, rat, RationalFunction};

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s).unwrap()
    }

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::real(rat(n, d))
    }

    #[test]
    fn euler_operator_at_zero() {
        let op = DiffOperator::new(vec![rf("0"), rf("-x"), rf("x^2")]).unwrap();
        let res = indicial(&op, Point::Finite(GaussianRational::zero())).unwrap();
        assert!(res.regular);
        assert_eq!(res.exponents_exact, Some(vec![q(0, 1), q(2, 1)]));
    }

    #[test]
    fn cube_seed_at_infinity() {
        let op = DiffOperator::new(vec![rf("15*x"), rf("81*x^2 + 1"), rf("27*x^3")]).unwrap();
        let res = indicial(&op, Point::Infinity).unwrap();
        assert!(res.regular);
        assert_eq!(res.exponents_exact, Some(vec![q(-5, 3), q(-1, 3)]));
        assert!(exponent_check(&res, &q(-1, 3)));
        assert!(!exponent_check(&res, &q(0, 1)));
        // irregular at 0: the x^-1 theta term sits below the order-2 part
        let at0 = indicial(&op, Point::Finite(GaussianRational::zero())).unwrap();
        assert!(!at0.regular);
        assert!(at0.poly.is_none());
    }

    #[test]
    fn beta_seed_at_zero() {
        // a = 2, b = 3
        let op = DiffOperator::new(vec![rf("-2*i*x^-1"), rf("-i + 5*x^-1"), rf("1")]).unwrap();
        let res = indicial(&op, Point::Finite(GaussianRational::zero())).unwrap();
        assert!(res.regular);
        assert_eq!(res.exponents_exact, Some(vec![q(-4, 1), q(0, 1)]));
    }

    #[test]
    fn translated_point() {
        // (x - 1)^2 Dx^2 - 2 at x = 1: theta(theta - 1) - 2, exponents -1, 2
        let op = DiffOperator::new(vec![rf("-2"), rf("0"), rf("x^2 - 2*x + 1")]).unwrap();
        let res = indicial(&op, Point::Finite(q(1, 1))).unwrap();
        assert_eq!(res.exponents_exact, Some(vec![q(-1, 1), q(2, 1)]));
        for (z, e) in res.exponents_numeric.iter().zip([-1.0, 2.0]) {
            assert!((z - Complex64::new(e, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn fourier_exponent_map() {
        assert_eq!(
            fourier_exponents(&[q(-1, 1)], 1, 1, FourierSide::ZeroToInfinity).unwrap(),
            vec![q(0, 1)]
        );
        assert_eq!(
            fourier_exponents(&[q(0, 1), q(2, 1)], 2, 2, FourierSide::ZeroToInfinity).unwrap(),
            vec![q(-1, 1), q(-3, 1)]
        );
        assert_eq!(
            fourier_exponents(&[q(-1, 3)], 3, 1, FourierSide::InfinityToZero).unwrap(),
            vec![q(-2, 3), q(0, 1), q(1, 1)]
        );
        assert!(fourier_exponents(&[], 3, 1, FourierSide::ZeroToInfinity).is_err());
        assert!(fourier_exponents(&[], 1, 3, FourierSide::InfinityToZero).is_err());
    }
}
