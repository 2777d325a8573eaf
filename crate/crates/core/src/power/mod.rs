//! Powers of solutions of second-order equations: the `Q(x)` recursion, its
//! kernel, the resulting `(n+1)`-th order operator, the degree bound, and the
//! eigenvalue lemma behind the exponents of that operator.

pub mod degree;
pub mod eigen;
pub mod qmatrix;

pub use degree::{degree_bound, degree_bound_formula};
pub use eigen::{
    char_poly, check_2f1_recursion, eig_matrix, eig_matrix_scaled, eig_vector, predicted_exponents,
    ExponentPrediction,
};
pub use qmatrix::{build_q, diagonal_value, kernel_vector, power_operator, power_operator_with, PowerODE, QMatrix};

use thiserror::Error;

use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::weyl::{DiffOperator, WeylError};

pub const DEFAULT_MAX_N: usize = 16;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "HOLOPOW_MAX_N";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PowerError {
    #[error("power n must be at least 1")]
    ZeroPower,
    #[error("power n = {n} exceeds the configured cap {max} (set {MAX_N_ENV} to raise it)")]
    TooLarge { n: usize, max: usize },
    #[error("seed coefficient {0} is not a Laurent polynomial")]
    NotLaurent(&'static str),
    #[error("degree-bound hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("index k = {k} out of range for n = {n}")]
    Index { k: usize, n: usize },
    #[error("2F1 lower parameter {c} reaches a nonpositive integer within the summation range")]
    Undefined2F1 { c: i64 },
    #[error("invalid {MAX_N_ENV} value {0:?}")]
    BadEnv(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerOptions {
    pub max_n: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N }
    }
}

impl PowerOptions {
    /// Defaults, with `max_n` taken from `HOLOPOW_MAX_N` when set.
    pub fn from_env() -> Result<Self, PowerError> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_n| Self { max_n })
                .map_err(|_| PowerError::BadEnv(v)),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check(&self, n: usize) -> Result<(), PowerError> {
        if n == 0 {
            Err(PowerError::ZeroPower)
        } else if n > self.max_n {
            Err(PowerError::TooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

/// `Dx^2 f = a1 Dx f + a0 f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondOrderSeed {
    pub a0: RationalFunction,
    pub a1: RationalFunction,
}

impl SecondOrderSeed {
    pub fn new(a0: RationalFunction, a1: RationalFunction) -> Self {
        Self { a0, a1 }
    }

    pub fn from_laurent(a0: &LaurentPolynomial, a1: &LaurentPolynomial) -> Self {
        Self::new(a0.into(), a1.into())
    }

    pub fn laurent(&self) -> Result<(LaurentPolynomial, LaurentPolynomial), PowerError> {
        Ok((
            self.a0.to_laurent().ok_or(PowerError::NotLaurent("a0"))?,
            self.a1.to_laurent().ok_or(PowerError::NotLaurent("a1"))?,
        ))
    }

    /// `Dx^2 - a1 Dx - a0`.
    pub fn operator(&self) -> DiffOperator {
        DiffOperator::new(vec![-&self.a0, -&self.a1, RationalFunction::one()])
            .expect("monic operator is nonzero")
    }
}
