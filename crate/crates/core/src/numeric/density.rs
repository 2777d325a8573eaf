//! End-to-end numeric densities of sums of cubed standard normals, grid
//! parsing, and CSV/JSON export.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::initial::{initial_values, InitialValueJob};
use super::ivp::{ivp_solve, IvpOptions, IvpStats};
use super::montecarlo::monte_carlo_density;
use super::phi::PhiEvaluator;
use super::NumericError;
use crate::power::PowerOptions;
use crate::stats::cube_density_ode;

/// Largest number of points a grid specification may expand to.
pub const MAX_GRID_POINTS: usize = 1_000_000;

/// Parses `a:b:step` into `a, a + step, ...` up to `b` (inclusive within
/// rounding).
pub fn parse_grid(s: &str) -> Result<Vec<f64>, NumericError> {
    let bad = || NumericError::Grid(s.chars().take(64).collect());
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let num = |p: &str| p.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    let (a, b, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
    if step <= 0.0 || b < a {
        return Err(bad());
    }
    let count = ((b - a) / step * (1.0 + 1e-12)).floor();
    if !(count < MAX_GRID_POINTS as f64) {
        return Err(bad());
    }
    Ok((0..=count as usize).map(|i| a + i as f64 * step).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub x: f64,
    pub f: f64,
    /// Monte Carlo standard error when `mc` is present, otherwise the
    /// solver's scaled defect.
    pub stderr_or_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mc: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityTable {
    pub n: usize,
    pub x0: f64,
    pub rows: Vec<DensityRow>,
}

impl DensityTable {
    pub fn to_csv(&self) -> String {
        let with_mc = self.rows.iter().any(|r| r.mc.is_some());
        let mut out = String::from(if with_mc { "x,f,stderr_or_residual,mc\n" } else { "x,f,stderr_or_residual\n" });
        for r in &self.rows {
            out.push_str(&format!("{},{:.12e},{:.3e}", r.x, r.f, r.stderr_or_residual));
            if with_mc {
                out.push_str(&format!(",{:.12e}", r.mc.unwrap_or(f64::NAN)));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, NumericError> {
        serde_json::from_str(s).map_err(|e| NumericError::Domain(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubeDensityConfig {
    pub n: usize,
    pub x0: f64,
    pub t: Option<f64>,
    pub m: Option<usize>,
    pub mc_samples: Option<usize>,
    pub mc_seed: u64,
    pub ivp: IvpOptions,
    pub phi: PhiEvaluator,
}

impl CubeDensityConfig {
    pub fn new(n: usize, x0: f64) -> Self {
        Self {
            n,
            x0,
            t: None,
            m: None,
            mc_samples: None,
            mc_seed: 20_240_601,
            ivp: IvpOptions::default(),
            phi: PhiEvaluator::default(),
        }
    }
}

/// Values of the density of `X_1^3 + ... + X_n^3` on `grid` (all of one
/// sign as `x0`): initial data at `x0` from the inversion formula, then the
/// order-`3n` density equation.
pub fn cube_density(cfg: &CubeDensityConfig, grid: &[f64], power: &PowerOptions) -> Result<(DensityTable, IvpStats), NumericError> {
    let ode = cube_density_ode(cfg.n, power).map_err(|e| NumericError::Domain(e.to_string()))?;
    let mut job = InitialValueJob::new(cfg.n, cfg.x0);
    if let Some(t) = cfg.t {
        job.t = t;
    }
    if let Some(m) = cfg.m {
        job.m = m;
    }
    let init: Vec<Complex64> = initial_values(&job, &cfg.phi)?
        .into_iter()
        .map(|v| Complex64::new(v, 0.0))
        .collect();
    let sol = ivp_solve(&ode.diff_operator(), cfg.x0, &init, grid, &cfg.ivp)?;
    let mc = match cfg.mc_samples {
        Some(s) => Some(monte_carlo_density(cfg.n, grid, s, cfg.mc_seed)?),
        None => None,
    };
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| DensityRow {
            x,
            f: sol.values[i][0].re,
            stderr_or_residual: mc.as_ref().map_or(sol.stats.max_residual, |m| m.stderr[i]),
            mc: mc.as_ref().map(|m| m.density[i]),
        })
        .collect();
    Ok((
        DensityTable {
            n: cfg.n,
            x0: cfg.x0,
            rows,
        },
        sol.stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0:1:0.25").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(parse_grid("0.5:3:0.5").unwrap().len(), 6);
        assert_eq!(parse_grid("1:1:1").unwrap(), vec![1.0]);
        for bad in ["", "1:2", "a:b:c", "0:1:0", "0:1:-1", "2:1:0.1", "0:1e300:1e-300", "0:inf:1", "0:1:2:3"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn csv_layout() {
        let t = DensityTable {
            n: 1,
            x0: 1.0,
            rows: vec![DensityRow {
                x: 0.5,
                f: 0.25,
                stderr_or_residual: 1e-9,
                mc: None,
            }],
        };
        assert_eq!(t.to_csv(), "x,f,stderr_or_residual\n0.5,2.500000000000e-1,1.000e-9\n");
        assert_eq!(DensityTable::from_json(&t.to_json()).unwrap(), t);
    }
}
