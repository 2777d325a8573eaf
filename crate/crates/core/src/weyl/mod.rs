//! Differential-operator calculus: the Weyl algebra in normal form, the
//! Fourier isomorphism, Euler-operator (theta) form, indicial polynomials and
//! exponents, and operator serialization.

pub mod element;
pub mod indicial;
pub mod operator;
pub mod serial;
pub mod theta;

pub use element::{fourier, weyl_mul, WeylElement};
pub use indicial::{exponent_check, fourier_exponents, indicial, FourierSide, IndicialResult, Point};
pub use operator::{residual_eval, DiffOperator};
pub use serial::{
    operator_from_json, operator_from_text, operator_from_value, operator_to_json, operator_to_text, operator_to_value,
};
pub use theta::{to_theta_form, ThetaForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeylError {
    #[error("the zero operator is not allowed here")]
    ZeroOperator,
    #[error("coefficient {index} has a pole at x = {x}")]
    Pole { index: usize, x: num_complex::Complex64 },
    #[error("derivative stack has {got} entries but the operator has order {order}")]
    ShortDerivativeStack { order: usize, got: usize },
    #[error("coefficient {0} is not a Laurent polynomial")]
    NotLaurent(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("malformed operator: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The scalar `s` such that `s * c` is a Gaussian integer for every `c` in
/// `values`, with unit integer content, and `s * lead` is a positive integer.
pub(crate) fn canonical_scalar<'a, I>(values: I, lead: &GaussianRational) -> GaussianRational
where
    I: IntoIterator<Item = &'a GaussianRational> + Clone,
{
    let s1 = lead.inv().expect("canonical_scalar: zero leading coefficient");
    let den = values
        .clone()
        .into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&(c * &s1).denom_lcm()));
    let content = values.into_iter().fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(&(c * &s1) * &GaussianRational::real(Rational::from_integer(den.clone()))).numer_gcd())
    });
    s1.scale(&Rational::new(den, content))
}
