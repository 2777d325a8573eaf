//! Exact dense linear solving by fraction-free (Bareiss) elimination.

use num_traits::Zero;

use super::scalar::GaussianRational;
use super::AlgebraError;

/// Row-major dense matrix of exact scalars.
pub type Matrix = Vec<Vec<GaussianRational>>;

pub fn mat_vec(m: &Matrix, v: &[GaussianRational]) -> Vec<GaussianRational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

/// Solve `matrix * x = rhs` exactly.
///
/// Bareiss elimination keeps every intermediate entry a minor of the
/// augmented matrix, so each division is exact and entries do not balloon.
pub fn solve_exact(
    matrix: &Matrix,
    rhs: &[GaussianRational],
) -> Result<Vec<GaussianRational>, AlgebraError> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) || rhs.len() != n {
        return Err(AlgebraError::Shape {
            rows: n,
            cols: matrix.first().map_or(0, |r| r.len()),
            rhs: rhs.len(),
        });
    }
    let mut a: Matrix = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut prev = GaussianRational::from_int(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Err(AlgebraError::Singular { pivot: k });
        };
        a.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &v / &prev;
            }
            a[i][k] = GaussianRational::zero();
        }
        prev = a[k][k].clone();
    }

    let mut x = vec![GaussianRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = a[i][n].clone();
        for j in i + 1..n {
            acc -= &(&a[i][j] * &x[j]);
        }
        x[i] = &acc / &a[i][i];
    }
    Ok(x)
}
