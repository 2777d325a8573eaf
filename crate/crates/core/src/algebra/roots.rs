//! Polynomial roots: floating roots from balanced companion matrices and
//! exact Gaussian-rational roots recovered from them.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Zero};

use super::poly::Polynomial;
use super::scalar::{GaussianRational, Rational};

/// Diagonal similarity scaling by powers of two so row and column norms
/// are comparable (Parlett–Reinsch).
fn balance(m: &mut DMatrix<Complex64>) {
    let n = m.nrows();
    let radix = 2.0_f64;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += m[(j, i)].norm();
                    r += m[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / radix;
            while c < g {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while c > g {
                f /= radix;
                c /= radix * radix;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                }
                for j in 0..n {
                    m[(j, i)] *= f;
                }
            }
        }
    }
}

/// Eigenvalues of the companion matrix of the polynomial with the given
/// ascending complex coefficients (leading coefficient nonzero).
pub fn companion_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lc = coeffs[deg];
    if deg == 1 {
        return vec![-coeffs[0] / lc];
    }
    let mut m = DMatrix::<Complex64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -coeffs[i] / lc;
    }
    balance(&mut m);
    let schur = nalgebra::linalg::Schur::new(m);
    let (_, t) = schur.unpack();
    (0..deg).map(|i| t[(i, i)]).collect()
}

fn polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= 1e-17 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Roots of a square-free polynomial, polished by Newton steps.
fn simple_roots(p: &Polynomial) -> Vec<Complex64> {
    let c = p.to_complex_coeffs();
    companion_roots(&c).into_iter().map(|z| polish(&c, z)).collect()
}

/// Floating roots with multiplicity. Repeated roots are resolved through an
/// exact square-free decomposition so each is found from a simple factor.
pub fn numeric_roots(p: &Polynomial) -> Vec<Complex64> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for z in simple_roots(&factor) {
            out.extend(std::iter::repeat(z).take(mult));
        }
    }
    out
}

/// Multiply by the common denominator and divide by the integer content so
/// every coefficient is a Gaussian integer with the smallest leading term.
fn gaussian_integer_form(p: &Polynomial) -> Polynomial {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let scaled = p.scale(&GaussianRational::real(Rational::from_integer(den)));
    let content = scaled
        .coeffs()
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(&c.numer_gcd()));
    if content.is_zero() || content.is_one() {
        return scaled;
    }
    scaled.scale(&GaussianRational::real(Rational::new(BigInt::one(), content)))
}

fn round_big(x: f64) -> Option<BigInt> {
    if !x.is_finite() {
        return None;
    }
    BigInt::from_f64(x.round())
}

/// All roots (with multiplicity) when every root is a Gaussian rational;
/// `None` otherwise.
///
/// For a polynomial with Gaussian-integer coefficients and leading
/// coefficient `lc`, every Gaussian-rational root `r` has `lc * r` a
/// Gaussian integer, so each floating root is rounded on that lattice and
/// the candidate is accepted only after exact evaluation.
pub fn exact_roots(p: &Polynomial) -> Option<Vec<GaussianRational>> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let int_form = gaussian_integer_form(&factor);
        let lc = int_form.leading()?.clone();
        let lc_c = lc.to_complex();
        for z in simple_roots(&factor) {
            let w = z * lc_c;
            let re = round_big(w.re)?;
            let im = round_big(w.im)?;
            let cand = &GaussianRational::new(Rational::from_integer(re), Rational::from_integer(im)) / &lc;
            if !factor.eval(&cand).is_zero() {
                return None;
            }
            out.extend(std::iter::repeat(cand).take(mult));
        }
    }
    Some(out)
}

#[cfg(test)]
fn approx_eq_multiset(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let best = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .min_by(|(_, p), (_, q)| (*p - x).norm().partial_cmp(&(*q - x).norm()).unwrap());
        match best {
            Some((j, y)) if (y - x).norm() <= tol * x.norm().max(1.0) => used[j] = true,
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    fn from_roots(roots: &[GaussianRational]) -> Polynomial {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear_root(r))
    }

    #[test]
    fn recovers_rational_roots_with_multiplicity() {
        let roots = vec![
            GaussianRational::real(rat(-1, 3)),
            GaussianRational::real(rat(-5, 3)),
            GaussianRational::real(rat(-5, 3)),
            GaussianRational::from_int(7),
        ];
        let mut got = exact_roots(&from_roots(&roots)).unwrap();
        let key = |g: &GaussianRational| (g.re.clone(), g.im.clone());
        got.sort_by_key(key);
        let mut want = roots.clone();
        want.sort_by_key(key);
        assert_eq!(got, want);
    }

    #[test]
    fn recovers_gaussian_roots() {
        let roots = vec![
            GaussianRational::new(rat(1, 2), rat(-3, 4)),
            GaussianRational::i(),
            GaussianRational::from_int(-2),
        ];
        let got = exact_roots(&from_roots(&roots)).unwrap();
        assert_eq!(got.len(), 3);
        for r in &roots {
            assert!(got.contains(r));
        }
    }

    #[test]
    fn irrational_roots_are_numeric_only() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        assert!(exact_roots(&p).is_none());
        let r = numeric_roots(&p);
        assert!(approx_eq_multiset(
            &r,
            &[Complex64::new(2f64.sqrt(), 0.0), Complex64::new(-(2f64.sqrt()), 0.0)],
            1e-14
        ));
    }

    #[test]
    fn multiple_roots_numerically_accurate() {
        let r = GaussianRational::real(rat(4, 3));
        let p = Polynomial::linear_root(&r).pow(7);
        let num = numeric_roots(&p);
        assert_eq!(num.len(), 7);
        for z in num {
            assert!((z - Complex64::new(4.0 / 3.0, 0.0)).norm() < 1e-12);
        }
    }
}
