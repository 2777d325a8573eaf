//! Printed example operators, kept as exact fixtures.

use serde::Deserialize;

use crate::algebra::{parse_rational_function, rat_int, Polynomial, Rational, RationalFunction};
use crate::power::SecondOrderSeed;
use crate::weyl::{operator_from_value, DiffOperator, WeylElement};

use super::StatsError;

const F4_JSON: &str = include_str!("../../fixtures/f4.json");
const EX_QX_JSON: &str = include_str!("../../fixtures/ex_qx.json");

/// Density operator of the sum of three Beta(a, b) variables, coefficients
/// listed from `Dx^0` up to `Dx^3`.
pub fn f3_operator(a: &Rational, b: &Rational) -> DiffOperator {
    DiffOperator::from_polys(f3_coeffs(a, b)).expect("leading coefficient is nonzero")
}

/// [`f3_operator`] as a Weyl-algebra element, without cancelling common
/// polynomial factors of the coefficients.
pub fn f3_weyl(a: &Rational, b: &Rational) -> WeylElement {
    f3_coeffs(a, b)
        .iter()
        .enumerate()
        .fold(WeylElement::zero(), |acc, (k, p)| acc + WeylElement::from_poly_coeff(p, k as u32))
}

fn f3_coeffs(a: &Rational, b: &Rational) -> Vec<Polynomial> {
    let k = |v: i64| rat_int(v);
    let s = a + b;
    let am1 = a - k(1);
    let s2 = &s - k(2);
    let t23 = &(k(2) * &s) - k(3);
    let t34 = &(k(3) * &s) - k(4);
    let p = |c: Vec<Rational>| Polynomial::from_rationals(&c);

    let d3 = p(vec![k(0), k(-6), k(11), k(-6), k(1)]);
    let d2 = p(vec![
        k(18) * &am1,
        k(-6) * &(&(k(8) * a) + &(k(3) * b) - k(11)),
        k(2) * &(&(k(16) * a) + &(k(11) * b) - k(27)),
        k(-6) * &s2,
    ]);
    let quad = &(&(&(k(48) * a * a) + &(k(66) * a * b)) + &(k(18) * b * b))
        - &(&(k(145) * a) + &(k(95) * b))
        + k(108);
    let d1 = p(vec![
        k(3) * &am1 * (&(&(k(15) * a) + &(k(12) * b)) - k(22)),
        -quad,
        &s2 * &(&(k(11) * &s) - k(18)),
    ]);
    let d0 = p(vec![
        k(3) * &am1 * &t23 * &t34,
        -(&s2 * &t23 * &t34),
    ]);
    vec![d0, d1, d2, d3]
}

/// Density operator of the sum of four cubed standard normals (order 12).
pub fn f4_operator() -> DiffOperator {
    let v: serde_json::Value = serde_json::from_str(F4_JSON).expect("bundled fixture is valid JSON");
    operator_from_value(&v).expect("bundled fixture is a valid operator")
}

/// The worked `Q(x)` example: seed, `q_{ij}` table (row `i`, column `j`),
/// kernel and resulting operator.
#[derive(Clone, Debug)]
pub struct ExQx {
    pub seed: SecondOrderSeed,
    pub n: usize,
    pub q: Vec<Vec<RationalFunction>>,
    pub kernel: Vec<RationalFunction>,
    pub operator: DiffOperator,
}

#[derive(Deserialize)]
struct ExQxRaw {
    a0: String,
    a1: String,
    n: usize,
    q: Vec<Vec<String>>,
    kernel: Vec<String>,
    operator: serde_json::Value,
}

pub fn ex_qx() -> ExQx {
    let raw: ExQxRaw = serde_json::from_str(EX_QX_JSON).expect("bundled fixture is valid JSON");
    let p = |s: &str| parse_rational_function(s).expect("bundled fixture parses");
    ExQx {
        seed: SecondOrderSeed::new(p(&raw.a0), p(&raw.a1)),
        n: raw.n,
        q: raw.q.iter().map(|row| row.iter().map(|s| p(s)).collect()).collect(),
        kernel: raw.kernel.iter().map(|s| p(s)).collect(),
        operator: operator_from_value(&raw.operator).expect("bundled fixture is a valid operator"),
    }
}

#[derive(Clone, Debug)]
pub enum PaperFixture {
    /// Depends on the beta parameters; see [`f3_operator`].
    F3,
    F4(DiffOperator),
    ExQx(ExQx),
}

pub fn paper_fixture(name: &str) -> Result<PaperFixture, StatsError> {
    match name {
        "f3" => Ok(PaperFixture::F3),
        "f4" => Ok(PaperFixture::F4(f4_operator())),
        "ex_qx" => Ok(PaperFixture::ExQx(ex_qx())),
        other => Err(StatsError::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::power::{build_q, kernel_vector, power_operator};

    #[test]
    fn f3_reduces_at_uniform() {
        let op = f3_operator(&rat(1, 1), &rat(1, 1));
        assert_eq!(op.order(), 3);
        for k in 0..3 {
            assert!(op.coeff(k).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn ex_qx_matches_recursion() {
        let ex = ex_qx();
        let q = build_q(&ex.seed, ex.n);
        assert_eq!(q.entries, ex.q);
        assert_eq!(kernel_vector(&q), ex.kernel);
        let p = power_operator(&ex.seed, ex.n).unwrap();
        assert!(p.operator.equivalent(&ex.operator));
    }

    #[test]
    fn names() {
        assert!(matches!(paper_fixture("f4"), Ok(PaperFixture::F4(op)) if op.order() == 12));
        assert!(matches!(paper_fixture("f5"), Err(StatsError::UnknownFixture(_))));
    }
}
