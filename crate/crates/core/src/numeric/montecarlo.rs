//! Monte Carlo kernel density estimates of `X_1^3 + ... + X_n^3`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::NumericError;

pub const MIN_SAMPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct DensityEstimate {
    pub xs: Vec<f64>,
    pub density: Vec<f64>,
    pub stderr: Vec<f64>,
    pub bandwidth: f64,
}

/// Draws `samples` sums with a ChaCha20 generator seeded by `seed`.
pub fn cube_sum_samples(n: usize, samples: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let z: f64 = rng.sample(StandardNormal);
                    z * z * z
                })
                .sum()
        })
        .collect()
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Silverman's rule `0.9 min(sd, IQR/1.34) N^(-1/5)`.
pub fn silverman_bandwidth(sorted: &[f64]) -> f64 {
    let n = sorted.len() as f64;
    let mean = sorted.iter().sum::<f64>() / n;
    let var = sorted.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
    0.9 * var.sqrt().min(iqr / 1.34) * n.powf(-0.2)
}

/// Gaussian-kernel density estimate at `xs` with the sample standard error
/// of each estimate.
pub fn kde(samples: &[f64], xs: &[f64]) -> DensityEstimate {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let h = silverman_bandwidth(&sorted);
    let n = sorted.len() as f64;
    let norm = 1.0 / (h * (2.0 * PI).sqrt());
    let reach = 9.0 * h;
    let (mut density, mut stderr) = (Vec::with_capacity(xs.len()), Vec::with_capacity(xs.len()));
    for &x in xs {
        let lo = sorted.partition_point(|&s| s < x - reach);
        let hi = sorted.partition_point(|&s| s <= x + reach);
        let (mut s1, mut s2) = (0.0, 0.0);
        for &s in &sorted[lo..hi] {
            let u = (x - s) / h;
            let k = norm * (-0.5 * u * u).exp();
            s1 += k;
            s2 += k * k;
        }
        let mean = s1 / n;
        let var = (s2 / n - mean * mean).max(0.0);
        density.push(mean);
        stderr.push((var / n).sqrt());
    }
    DensityEstimate {
        xs: xs.to_vec(),
        density,
        stderr,
        bandwidth: h,
    }
}

/// Kernel density estimate of the density of `X_1^3 + ... + X_n^3` at `xs`;
/// deterministic for a fixed `seed`.
pub fn monte_carlo_density(n: usize, xs: &[f64], samples: usize, seed: u64) -> Result<DensityEstimate, NumericError> {
    if n == 0 {
        return Err(NumericError::Domain("n must be at least 1".into()));
    }
    if samples < MIN_SAMPLES {
        return Err(NumericError::Domain(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    Ok(kde(&cube_sum_samples(n, samples, seed), xs))
}
