//! The tridiagonal matrix whose characteristic polynomial is the indicial
//! polynomial of the power operator, its explicit eigenvectors, and the
//! terminating hypergeometric identity behind them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, GaussianRational, Matrix, Polynomial, Rational};

use super::PowerError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentPrediction {
    pub lambda1: GaussianRational,
    pub lambda2: GaussianRational,
    pub n: usize,
    /// `(n-k) lambda1 + k lambda2` for `k = 0..=n`.
    pub values: Vec<GaussianRational>,
}

fn int(k: i64) -> GaussianRational {
    GaussianRational::from_int(k)
}

fn big(k: BigInt) -> GaussianRational {
    GaussianRational::real(Rational::from_integer(k))
}

pub fn predicted_exponents(
    lambda1: &GaussianRational,
    lambda2: &GaussianRational,
    n: usize,
) -> ExponentPrediction {
    let values = (0..=n as i64)
        .map(|k| &(lambda1 * &int(n as i64 - k)) + &(lambda2 * &int(k)))
        .collect();
    ExponentPrediction {
        lambda1: lambda1.clone(),
        lambda2: lambda2.clone(),
        n,
        values,
    }
}

/// `(n+1) x (n+1)` tridiagonal: diagonal `l (lambda1 + lambda2)`, above it
/// `-(l+1) lambda1 lambda2`, below it `n - l` (row `l + 1`).
pub fn eig_matrix(lambda1: &GaussianRational, lambda2: &GaussianRational, n: usize) -> Matrix {
    let sum = lambda1 + lambda2;
    let prod = lambda1 * lambda2;
    let mut m = vec![vec![GaussianRational::zero(); n + 1]; n + 1];
    for l in 0..=n {
        m[l][l] = &sum * &int(l as i64);
        if l < n {
            m[l][l + 1] = -&(&prod * &int(l as i64 + 1));
            m[l + 1][l] = int((n - l) as i64);
        }
    }
    m
}

/// The similar matrix `M' / lambda1` with `z = lambda2 / lambda1`: diagonal
/// `l (1 + z)`, above it `l + 1`, below it `-(n - l) z` (row `l + 1`).
pub fn eig_matrix_scaled(z: &GaussianRational, n: usize) -> Matrix {
    let one_z = &GaussianRational::one() + z;
    let mut m = vec![vec![GaussianRational::zero(); n + 1]; n + 1];
    for l in 0..=n {
        m[l][l] = &one_z * &int(l as i64);
        if l < n {
            m[l][l + 1] = int(l as i64 + 1);
            m[l + 1][l] = -&(z * &int((n - l) as i64));
        }
    }
    m
}

/// `det(lambda I - A)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(a: &Matrix) -> Polynomial {
    let n = a.len();
    let mut c = vec![GaussianRational::zero(); n + 1];
    c[n] = GaussianRational::one();
    let mut mk: Matrix = vec![vec![GaussianRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(a, &mk);
        let tr = (0..n).fold(GaussianRational::zero(), |acc, i| &acc + &am[i][i]);
        c[n - k] = -&tr.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
    }
    Polynomial::new(c)
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![GaussianRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Eigenvector `v^k` of `M' / lambda1` for `mu_k = k z + (n - k)`:
/// `v_l = sum_j C(n-k, l-j) C(k, j) z^j`. For `z = 1` this is the
/// generalized eigenvector `v_l = C(n-k, l)` of the chain
/// `(n I - M'/lambda1) v^k = k v^(k-1)`.
pub fn eig_vector(n: usize, k: usize, z: &GaussianRational) -> Result<Vec<GaussianRational>, PowerError> {
    if k > n {
        return Err(PowerError::Index { k, n });
    }
    let (n64, k64) = (n as u64, k as u64);
    if z.is_one() {
        return Ok((0..=n64).map(|l| big(binomial(n64 - k64, l))).collect());
    }
    Ok((0..=n64)
        .map(|l| {
            let lo = (k64 + l).saturating_sub(n64);
            let hi = k64.min(l);
            (lo..=hi).fold(GaussianRational::zero(), |acc, j| {
                let c = binomial(n64 - k64, l - j) * binomial(k64, j);
                &acc + &(&big(c) * &z.pow(j as u32))
            })
        })
        .collect())
}

/// `2F1(a, b; c; z)` for a nonpositive integer `a` (or `b`), summed up to
/// the first vanishing upper Pochhammer symbol. Fails when `(c)_m` vanishes
/// inside that range.
fn hyp2f1_terminating(a: i64, b: i64, c: i64, z: &GaussianRational) -> Result<GaussianRational, PowerError> {
    let mut top = if a <= 0 { -a } else { i64::MAX };
    if b <= 0 {
        top = top.min(-b);
    }
    assert!(top != i64::MAX, "series does not terminate");
    let mut term = GaussianRational::one();
    let mut sum = GaussianRational::one();
    for m in 0..top {
        if c + m == 0 {
            return Err(PowerError::Undefined2F1 { c });
        }
        let r = Rational::new(
            BigInt::from((a + m) * (b + m)),
            BigInt::from((c + m) * (m + 1)),
        );
        term = &term.scale(&r) * z;
        sum += &term;
    }
    Ok(sum)
}

/// Checks, exactly,
/// `c(c-1) F(-k,-l-1;c-1) - c(c-1+(k-l)z) F(-k,-l;c) - l(c+k) z F(-k,-l+1;c+1) = 0`
/// with `c = n - k - l + 1` and `F = 2F1(.; z)`.
pub fn check_2f1_recursion(k: i64, l: i64, n: i64, z: &GaussianRational) -> Result<bool, PowerError> {
    let c = n - k - l + 1;
    let cz = |v: i64| int(v);
    let f1 = hyp2f1_terminating(-k, -l - 1, c - 1, z)?;
    let f2 = hyp2f1_terminating(-k, -l, c, z)?;
    let t1 = &cz(c * (c - 1)) * &f1;
    let t2 = &(&cz(c) * &(&cz(c - 1) + &(z * &cz(k - l)))) * &f2;
    let t3 = if l == 0 {
        GaussianRational::zero()
    } else {
        let f3 = hyp2f1_terminating(-k, -l + 1, c + 1, z)?;
        &(&cz(l * (c + k)) * z) * &f3
    };
    Ok((&(&t1 - &t2) - &t3).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{mat_vec, rat};

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::real(rat(n, d))
    }

    fn sub_scaled(a: &Matrix, mu: &GaussianRational, v: &[GaussianRational]) -> Vec<GaussianRational> {
        // (mu I - A) v
        mat_vec(a, v)
            .iter()
            .zip(v)
            .map(|(av, vi)| &(mu * vi) - av)
            .collect()
    }

    #[test]
    fn small_matrices() {
        let (l1, l2) = (q(2, 3), q(-1, 5));
        let m = eig_matrix(&l1, &l2, 1);
        assert_eq!(m, vec![vec![q(0, 1), -&(&l1 * &l2)], vec![q(1, 1), &l1 + &l2]]);
        let p = char_poly(&eig_matrix(&q(0, 1), &q(1, 1), 3));
        assert_eq!(p, Polynomial::from_ints(&[0, -6, 11, -6, 1]));
    }

    #[test]
    fn char_poly_matches_prediction() {
        let (l1, l2) = (q(1, 3), GaussianRational::new(rat(-2, 1), rat(1, 2)));
        for n in 1..6 {
            let p = char_poly(&eig_matrix(&l1, &l2, n));
            for v in predicted_exponents(&l1, &l2, n).values {
                assert!(p.eval(&v).is_zero());
            }
        }
    }

    #[test]
    fn eigenvectors() {
        assert_eq!(eig_vector(2, 1, &q(2, 1)).unwrap(), vec![q(1, 1), q(3, 1), q(2, 1)]);
        assert_eq!(eig_vector(3, 0, &q(7, 2)).unwrap(), vec![q(1, 1), q(3, 1), q(3, 1), q(1, 1)]);
        assert_eq!(eig_vector(3, 1, &q(1, 1)).unwrap(), vec![q(1, 1), q(2, 1), q(1, 1), q(0, 1)]);
        assert_eq!(eig_vector(2, 3, &q(1, 1)), Err(PowerError::Index { k: 3, n: 2 }));
        let z = q(-3, 4);
        for n in 1..6usize {
            let a = eig_matrix_scaled(&z, n);
            for k in 0..=n {
                let mu = &(&z * &q(k as i64, 1)) + &q((n - k) as i64, 1);
                let r = sub_scaled(&a, &mu, &eig_vector(n, k, &z).unwrap());
                assert!(r.iter().all(|x| x.is_zero()), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn generalized_chain_at_one() {
        let one = q(1, 1);
        for n in 1..6usize {
            let a = eig_matrix_scaled(&one, n);
            let nn = q(n as i64, 1);
            for k in 0..=n {
                let r = sub_scaled(&a, &nn, &eig_vector(n, k, &one).unwrap());
                let want: Vec<GaussianRational> = if k == 0 {
                    vec![GaussianRational::zero(); n + 1]
                } else {
                    eig_vector(n, k - 1, &one)
                        .unwrap()
                        .iter()
                        .map(|v| v * &q(k as i64, 1))
                        .collect()
                };
                assert_eq!(r, want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn hypergeometric_identity() {
        assert!(check_2f1_recursion(0, 2, 4, &q(5, 7)).unwrap());
        assert!(check_2f1_recursion(1, 1, 4, &q(2, 1)).unwrap());
        assert!(check_2f1_recursion(2, 1, 5, &q(1, 3)).unwrap());
    }
}

