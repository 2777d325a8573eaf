//! Floating-point layer: the characteristic function of a cubed normal,
//! initial values of the density equation, an adaptive ODE solver and
//! Monte Carlo oracles.

pub mod density;
pub mod initial;
pub mod ivp;
pub mod jvals;
pub mod montecarlo;
pub mod phi;
pub mod quad;
pub mod special;

pub use density::{cube_density, parse_grid, CubeDensityConfig, DensityRow, DensityTable};
pub use initial::{initial_values, InitialValueJob};
pub use ivp::{ivp_solve, IVPSolution, IvpOptions, IvpStats};
pub use jvals::{full_line, j_values};
pub use montecarlo::{kde, monte_carlo_density, DensityEstimate};
pub use phi::{airy_phi, phi_asymptotic, phi_quadrature, phi_quadrature_deriv, PhiEvaluator, PhiPowerExpansion};
pub use quad::{integrate, integrate_real, QuadOptions, QuadResult};
pub use special::{airy_ai, cisi, cube_normal_density, multifactorial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("quadrature tolerance not met: achieved {achieved:.3e}, target {target:.3e}")]
    Tolerance { achieved: f64, target: f64 },
    #[error("{0}")]
    Domain(String),
    #[error("x0 = {0} is a singular point of the density equation")]
    SingularPoint(f64),
    #[error("derivative order {k_max} violates k < m + n/3 (m = {m}, n = {n})")]
    Validity { k_max: usize, m: usize, n: usize },
    #[error("singular point x = {0} lies on the integration path")]
    SingularityOnPath(f64),
    #[error("step size underflow at x = {0}")]
    StepSize(f64),
    #[error("step limit reached at x = {0}")]
    StepLimit(f64),
    #[error("malformed grid {0:?} (expected a:b:step with step > 0 and a <= b)")]
    Grid(String),
}
