//! Initial-value problems for linear operators `sum_k c_k(x) Dx^k`, solved
//! on the companion first-order system with the Dormand-Prince 5(4) pair
//! and its continuous extension.

use num_complex::Complex64;
use num_traits::Zero;

use super::NumericError;
use crate::algebra::roots::numeric_roots;
use crate::weyl::DiffOperator;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IvpOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Leading-coefficient zeros closer than this to the path are fatal.
    pub exclusion_radius: f64,
    pub max_steps: usize,
}

impl Default for IvpOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-12,
            exclusion_radius: 1e-3,
            max_steps: 500_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IvpStats {
    pub steps: usize,
    pub rejected: usize,
    /// Largest scaled defect `|h| |P' - F(x, P)| / (atol + rtol |P|)` of the
    /// continuous extension `P` at step midpoints.
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IVPSolution {
    pub grid: Vec<f64>,
    /// `values[i][k]` is the `k`-th derivative at `grid[i]`.
    pub values: Vec<Vec<Complex64>>,
    pub stats: IvpStats,
}

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
// fifth-order weights minus embedded fourth-order weights
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// dense output
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

struct Companion {
    coeffs: Vec<Vec<Complex64>>,
}

impl Companion {
    fn new(op: &DiffOperator) -> Self {
        let coeffs = op.primitive_polys().iter().map(|p| p.to_complex_coeffs()).collect();
        Self { coeffs }
    }

    fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn poly(c: &[Complex64], x: f64) -> Complex64 {
        c.iter().rev().fold(Complex64::zero(), |acc, a| acc * x + a)
    }

    fn rhs(&self, x: f64, y: &[Complex64], out: &mut [Complex64]) {
        let r = self.order();
        out[..r - 1].copy_from_slice(&y[1..r]);
        let lead = Self::poly(&self.coeffs[r], x);
        let s: Complex64 = (0..r).map(|k| Self::poly(&self.coeffs[k], x) * y[k]).sum();
        out[r - 1] = -s / lead;
    }
}

fn axpy(y: &[Complex64], h: f64, ks: &[Vec<Complex64>], w: &[f64], out: &mut [Complex64]) {
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::zero();
        for (k, wk) in ks.iter().zip(w) {
            if *wk != 0.0 {
                acc += k[i] * *wk;
            }
        }
        *o = y[i] + acc * h;
    }
}

struct Step {
    x: f64,
    h: f64,
    r1: Vec<Complex64>,
    r2: Vec<Complex64>,
    r3: Vec<Complex64>,
    r4: Vec<Complex64>,
    r5: Vec<Complex64>,
}

impl Step {
    fn eval(&self, theta: f64) -> Vec<Complex64> {
        let t1 = 1.0 - theta;
        (0..self.r1.len())
            .map(|i| self.r1[i] + (self.r2[i] + (self.r3[i] + (self.r4[i] + self.r5[i] * t1) * theta) * t1) * theta)
            .collect()
    }

    fn deriv(&self, theta: f64) -> Vec<Complex64> {
        let t1 = 1.0 - theta;
        (0..self.r1.len())
            .map(|i| {
                (self.r2[i]
                    + self.r3[i] * (1.0 - 2.0 * theta)
                    + self.r4[i] * (theta * (2.0 - 3.0 * theta))
                    + self.r5[i] * (2.0 * theta * t1 * (1.0 - 2.0 * theta)))
                    / self.h
            })
            .collect()
    }
}

fn check_path(op: &DiffOperator, x0: f64, targets: &[f64], radius: f64) -> Result<(), NumericError> {
    let lead = op.primitive_polys().pop().expect("operator has a leading coefficient");
    let lo = targets.iter().fold(x0, |a, &b| a.min(b));
    let hi = targets.iter().fold(x0, |a, &b| a.max(b));
    for z in numeric_roots(&lead) {
        if z.im.abs() <= radius && z.re >= lo - radius && z.re <= hi + radius {
            return Err(NumericError::SingularityOnPath(z.re + 0.0));
        }
    }
    Ok(())
}

/// Solves `op . f = 0` from `(f, f', ..., f^(r-1))(x0) = init`, reporting the
/// derivative stack at every target (in the order given).
pub fn ivp_solve(
    op: &DiffOperator,
    x0: f64,
    init: &[Complex64],
    targets: &[f64],
    opts: &IvpOptions,
) -> Result<IVPSolution, NumericError> {
    let sys = Companion::new(op);
    let r = sys.order();
    if r == 0 {
        return Err(NumericError::Domain("operator of order 0 has no initial-value problem".into()));
    }
    if init.len() != r {
        return Err(NumericError::Domain(format!("need {r} initial values, got {}", init.len())));
    }
    if targets.iter().any(|t| !t.is_finite()) || !x0.is_finite() {
        return Err(NumericError::Domain("non-finite abscissa".into()));
    }
    check_path(op, x0, targets, opts.exclusion_radius)?;

    let mut stats = IvpStats::default();
    let mut values = vec![Vec::new(); targets.len()];
    for dir in [1.0, -1.0] {
        let mut idx: Vec<usize> = (0..targets.len())
            .filter(|&i| (targets[i] - x0) * dir > 0.0)
            .collect();
        idx.sort_by(|&a, &b| ((targets[a] - x0) * dir).total_cmp(&((targets[b] - x0) * dir)));
        if idx.is_empty() {
            continue;
        }
        let end = targets[*idx.last().unwrap()];
        integrate_dir(&sys, x0, init, end, dir, &idx, targets, &mut values, &mut stats, opts)?;
    }
    for (i, t) in targets.iter().enumerate() {
        if *t == x0 {
            values[i] = init.to_vec();
        }
    }
    Ok(IVPSolution {
        grid: targets.to_vec(),
        values,
        stats,
    })
}

#[allow(clippy::too_many_arguments)]
fn integrate_dir(
    sys: &Companion,
    x0: f64,
    init: &[Complex64],
    end: f64,
    dir: f64,
    idx: &[usize],
    targets: &[f64],
    values: &mut [Vec<Complex64>],
    stats: &mut IvpStats,
    opts: &IvpOptions,
) -> Result<(), NumericError> {
    let r = sys.order();
    let mut x = x0;
    let mut y = init.to_vec();
    let mut ks = vec![vec![Complex64::zero(); r]; 7];
    sys.rhs(x, &y, &mut ks[0]);
    let span = (end - x0).abs();
    let mut h = dir * (span * 1e-3).min(1e-2);
    let mut next = 0;
    let mut tmp = vec![Complex64::zero(); r];
    let mut ynew = vec![Complex64::zero(); r];
    let mut steps = 0usize;

    while next < idx.len() {
        if steps >= opts.max_steps {
            return Err(NumericError::StepLimit(x));
        }
        steps += 1;
        if (x + h - end) * dir > 0.0 {
            h = end - x;
        }
        for s in 1..7 {
            axpy(&y, h, &ks[..s], &A[s][..s], &mut tmp);
            sys.rhs(x + C[s] * h, &tmp, &mut ks[s]);
        }
        // stage 7 is evaluated at the fifth-order solution (FSAL)
        ynew.copy_from_slice(&tmp);
        let mut err = 0.0f64;
        for i in 0..r {
            let e: Complex64 = (0..7).map(|s| ks[s][i] * E[s]).sum::<Complex64>() * h;
            let sc = opts.atol + opts.rtol * y[i].norm().max(ynew[i].norm());
            err = err.max(e.norm() / sc);
        }
        if !err.is_finite() {
            stats.rejected += 1;
            h *= 0.2;
            if h.abs() < 1e-14 * x.abs().max(1.0) {
                return Err(NumericError::StepSize(x));
            }
            continue;
        }
        if err <= 1.0 {
            let ydiff: Vec<Complex64> = (0..r).map(|i| ynew[i] - y[i]).collect();
            let bspl: Vec<Complex64> = (0..r).map(|i| ks[0][i] * h - ydiff[i]).collect();
            let step = Step {
                x,
                h,
                r1: y.clone(),
                r4: (0..r).map(|i| ydiff[i] - ks[6][i] * h - bspl[i]).collect(),
                r5: (0..r)
                    .map(|i| (0..7).map(|s| ks[s][i] * D[s]).sum::<Complex64>() * h)
                    .collect(),
                r2: ydiff,
                r3: bspl,
            };
            // defect of the continuous extension at the midpoint
            let ym = step.eval(0.5);
            let dm = step.deriv(0.5);
            sys.rhs(x + 0.5 * h, &ym, &mut tmp);
            for i in 0..r {
                let sc = opts.atol + opts.rtol * ym[i].norm();
                stats.max_residual = stats.max_residual.max(h.abs() * (dm[i] - tmp[i]).norm() / sc);
            }
            let xnew = x + h;
            while next < idx.len() && (targets[idx[next]] - xnew) * dir <= 0.0 {
                let theta = (targets[idx[next]] - step.x) / step.h;
                values[idx[next]] = step.eval(theta);
                next += 1;
            }
            x = xnew;
            y.copy_from_slice(&ynew);
            let k6 = ks[6].clone();
            ks[0] = k6;
            stats.steps += 1;
        } else {
            stats.rejected += 1;
        }
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= fac;
        if h.abs() < 1e-14 * x.abs().max(1.0) {
            return Err(NumericError::StepSize(x));
        }
    }
    Ok(())
}
