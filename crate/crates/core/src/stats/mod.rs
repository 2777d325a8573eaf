//! Densities of sums of i.i.d. variables: beta sums, uniform sums
//! (Irwin-Hall) and sums of cubed standard normals, plus the printed
//! example operators used as fixtures.

pub mod fixtures;
pub mod irwin_hall;

pub use fixtures::{ex_qx, f3_operator, f3_weyl, f4_operator, paper_fixture, ExQx, PaperFixture};
pub use irwin_hall::{irwin_hall_density, PiecewisePolyDensity};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, GaussianRational, LaurentPolynomial, Rational};
use crate::power::{power_operator_with, PowerError, PowerOptions, SecondOrderSeed};
use crate::weyl::{DiffOperator, WeylElement, WeylError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("parameter {name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: String },
    #[error("n must be at least 1")]
    ZeroN,
    #[error("unknown fixture {0:?} (expected f3, f4 or ex_qx)")]
    UnknownFixture(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("density operator has order {got}, expected {expected}")]
    Order { expected: usize, got: usize },
    #[error("malformed density: {0}")]
    Format(String),
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaParams {
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
}

impl BetaParams {
    pub fn new(a: Rational, b: Rational, n: usize) -> Result<Self, StatsError> {
        check_positive("a", &a)?;
        check_positive("b", &b)?;
        if n == 0 {
            return Err(StatsError::ZeroN);
        }
        Ok(Self { a, b, n })
    }
}

fn check_positive(name: &'static str, v: &Rational) -> Result<(), StatsError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(StatsError::NonPositive {
            name,
            value: v.to_string(),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    Beta { a: Rational, b: Rational },
    Cube,
}

/// Operator annihilating the density of a sum of `n` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensityODE {
    pub n: usize,
    /// Canonical normal form with polynomial coefficients.
    pub operator: WeylElement,
    pub provenance: Provenance,
}

impl DensityODE {
    pub fn order(&self) -> usize {
        self.operator.order().unwrap_or(0) as usize
    }

    pub fn diff_operator(&self) -> DiffOperator {
        DiffOperator::from_weyl(&self.operator).expect("density operator is nonzero")
    }
}

/// Characteristic function of Beta(a, b):
/// `Dt^2 f = (i - (a+b)/t) Dt f + (i a / t) f`.
pub fn beta_char_seed(a: &Rational, b: &Rational) -> Result<SecondOrderSeed, StatsError> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    let i = GaussianRational::i();
    let a1 = LaurentPolynomial::from_terms([
        (0, i.clone()),
        (-1, -GaussianRational::real(a + b)),
    ]);
    let a0 = LaurentPolynomial::monomial(&i * &GaussianRational::real(a.clone()), -1);
    Ok(SecondOrderSeed::from_laurent(&a0, &a1))
}

/// Characteristic function of `X^3`, `X` standard normal:
/// `27 t^3 Dt^2 + (81 t^2 + 1) Dt + 15 t`, i.e.
/// `a1 = -3/t - 1/(27 t^3)`, `a0 = -5/(9 t^2)`.
pub fn cube_char_seed() -> SecondOrderSeed {
    let a1 = LaurentPolynomial::from_terms([
        (-1, GaussianRational::from_int(-3)),
        (-3, GaussianRational::from_ratio(-1, 27)),
    ]);
    let a0 = LaurentPolynomial::monomial(GaussianRational::from_ratio(-5, 9), -2);
    SecondOrderSeed::from_laurent(&a0, &a1)
}

fn density_from_seed(seed: &SecondOrderSeed, n: usize, opts: &PowerOptions) -> Result<WeylElement, StatsError> {
    let p = power_operator_with(seed, n, opts)?;
    Ok(p.operator.to_weyl().fourier().canonical())
}

/// Fourier transform of the power operator for the beta characteristic
/// function; of order exactly `n`.
pub fn beta_density_ode(p: &BetaParams, opts: &PowerOptions) -> Result<DensityODE, StatsError> {
    let seed = beta_char_seed(&p.a, &p.b)?;
    let operator = density_from_seed(&seed, p.n, opts)?;
    let out = DensityODE {
        n: p.n,
        operator,
        provenance: Provenance::Beta {
            a: p.a.clone(),
            b: p.b.clone(),
        },
    };
    if out.order() != p.n {
        return Err(StatsError::Order {
            expected: p.n,
            got: out.order(),
        });
    }
    Ok(out)
}

/// Density operator for `X_1^3 + ... + X_n^3`; of order exactly `3n`.
pub fn cube_density_ode(n: usize, opts: &PowerOptions) -> Result<DensityODE, StatsError> {
    if n == 0 {
        return Err(StatsError::ZeroN);
    }
    let operator = density_from_seed(&cube_char_seed(), n, opts)?;
    let out = DensityODE {
        n,
        operator,
        provenance: Provenance::Cube,
    };
    if out.order() != 3 * n {
        return Err(StatsError::Order {
            expected: 3 * n,
            got: out.order(),
        });
    }
    Ok(out)
}

/// Whether every coefficient of `w` is real.
pub fn is_real(w: &WeylElement) -> bool {
    w.terms().all(|(_, c)| c.im.is_zero())
}
