//! Exact arithmetic: rationals, Gaussian rationals, dense and Laurent
//! polynomials, rational functions, exact linear solving and polynomial
//! roots.

pub mod laurent;
pub mod linsolve;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
pub mod text;

pub use laurent::{laurent_bounds, DegreeBounds, LaurentPolynomial};
pub use linsolve::{mat_vec, solve_exact, Matrix};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use scalar::{binomial, falling_factorial, rat, rat_int, rational_to_f64, GaussianRational, Rational};
pub use text::{parse_laurent, parse_polynomial, parse_rational_function, parse_scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is singular (no pivot in column {pivot})")]
    Singular { pivot: usize },
    #[error("shape mismatch: {rows}x{cols} matrix with right-hand side of length {rhs}")]
    Shape { rows: usize, cols: usize, rhs: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("not a constant: {0}")]
    NotConstant(String),
}

/// `poly_gcd`: monic greatest common divisor, `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.gcd(q)
}
