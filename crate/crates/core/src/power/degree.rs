//! Upper bound on the degrees of the coprime kernel polynomials for Laurent
//! seeds.

use super::{PowerError, SecondOrderSeed};

/// `max{M0 + (n-1)M1, n M1, 0} - min{m0, m1} - (n-1) m1`, where `m_i, M_i`
/// are the lowest and highest exponents of `a_i`.
///
/// Requires `m1 <= -1`, `M1 >= -1`, `m0 >= 2 m1` and `M0 <= 2 M1`, with the
/// conventions `mindeg 0 = +inf`, `maxdeg 0 = -inf`.
pub fn degree_bound(seed: &SecondOrderSeed, n: usize) -> Result<i64, PowerError> {
    if n == 0 {
        return Err(PowerError::ZeroPower);
    }
    let (a0, a1) = seed.laurent()?;
    let (b0, b1) = (a0.bounds(), a1.bounds());
    let (lo0, hi0) = (b0.mindeg(), b0.maxdeg());
    let (lo1, hi1) = (b1.mindeg(), b1.maxdeg());
    let fail = |s: String| Err(PowerError::Hypothesis(s));
    let m1 = match lo1 {
        Some(m1) if m1 <= -1 => m1,
        Some(m1) => return fail(format!("m1 <= -1 fails (m1 = {m1})")),
        None => return fail("m1 <= -1 fails (a1 = 0, m1 = +inf)".into()),
    };
    let big_m1 = match hi1 {
        Some(v) if v >= -1 => v,
        Some(v) => return fail(format!("M1 >= -1 fails (M1 = {v})")),
        None => unreachable!("a1 is nonzero here"),
    };
    if let Some(m0) = lo0 {
        if m0 < 2 * m1 {
            return fail(format!("m0 >= 2*m1 fails (m0 = {m0}, m1 = {m1})"));
        }
    }
    if let Some(big_m0) = hi0 {
        if big_m0 > 2 * big_m1 {
            return fail(format!("M0 <= 2*M1 fails (M0 = {big_m0}, M1 = {big_m1})"));
        }
    }
    Ok(degree_bound_formula(lo0, hi0, m1, big_m1, n))
}

/// The bound expression alone, without checking the hypotheses. `None`
/// stands for `mindeg 0 = +inf` and `maxdeg 0 = -inf` of a vanishing `a0`.
pub fn degree_bound_formula(m0: Option<i64>, big_m0: Option<i64>, m1: i64, big_m1: i64, n: usize) -> i64 {
    let n = n as i64;
    let top = [big_m0.map(|m| m + (n - 1) * big_m1), Some(n * big_m1), Some(0)]
        .into_iter()
        .flatten()
        .max()
        .unwrap();
    let low = m0.map_or(m1, |m0| m0.min(m1));
    top - low - (n - 1) * m1
}
