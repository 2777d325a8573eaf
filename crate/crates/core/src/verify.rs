//! One-shot comparison of the engine against the printed fixtures and
//! worked values, with timings.

use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{rat, rat_int, GaussianRational, Polynomial, Rational};
use crate::numeric::{full_line, multifactorial, phi_asymptotic, phi_quadrature, special::GAMMA_TWO_THIRDS};
use crate::power::{build_q, degree_bound, eig_vector, kernel_vector, power_operator, predicted_exponents, PowerOptions};
use crate::stats::{
    beta_char_seed, beta_density_ode, cube_char_seed, cube_density_ode, ex_qx, f3_weyl, f4_operator, irwin_hall_density,
    BetaParams, StatsError,
};
use crate::weyl::{fourier_exponents, indicial, to_theta_form, DiffOperator, FourierSide, Point, ThetaForm};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub elapsed_ms: f64,
    /// Empty on success.
    pub detail: String,
}

type Check = fn(&PowerOptions) -> Result<(), String>;

const CHECKS: [(&str, Check); 13] = [
    ("ex_qx", check_ex_qx),
    ("f3", check_f3),
    ("f4", check_f4),
    ("theta_forms", check_theta_forms),
    ("exponents", check_exponents),
    ("degree_bound", check_degree_bound),
    ("exponent_ladder", check_ladder),
    ("uniform", check_uniform),
    ("irwin_hall", check_irwin_hall),
    ("eigenvector", check_eigenvector),
    ("multifactorial", check_multifactorial),
    ("phi_leading_order", check_phi_leading),
    ("j_full_line", check_full_line),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check, or only the one called `only`.
pub fn verify_paper(only: Option<&str>, opts: &PowerOptions) -> Result<Vec<CheckRecord>, StatsError> {
    if let Some(name) = only {
        if !CHECKS.iter().any(|(n, _)| *n == name) {
            return Err(StatsError::UnknownCheck(name.to_string()));
        }
    }
    Ok(CHECKS
        .iter()
        .filter(|(n, _)| only.map_or(true, |o| o == *n))
        .map(|(name, check)| {
            let start = Instant::now();
            let res = check(opts);
            CheckRecord {
                name: name.to_string(),
                passed: res.is_ok(),
                elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                detail: res.err().unwrap_or_default(),
            }
        })
        .collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(n: i64, d: i64) -> GaussianRational {
    GaussianRational::real(rat(n, d))
}

fn sorted(mut v: Vec<GaussianRational>) -> Vec<GaussianRational> {
    v.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)));
    v
}

fn check_ex_qx(_: &PowerOptions) -> Result<(), String> {
    let ex = ex_qx();
    let q = build_q(&ex.seed, ex.n);
    ensure(q.entries == ex.q, || "Q(x) differs".into())?;
    ensure(kernel_vector(&q) == ex.kernel, || "kernel differs".into())?;
    let p = power_operator(&ex.seed, ex.n).map_err(|e| e.to_string())?;
    ensure(p.operator.equivalent(&ex.operator), || "operator differs".into())
}

fn check_f3(opts: &PowerOptions) -> Result<(), String> {
    for (a, b) in [(rat(1, 1), rat(1, 1)), (rat(2, 1), rat(3, 1)), (rat(1, 2), rat(5, 2)), (rat(3, 1), rat(3, 1))] {
        let params = BetaParams::new(a.clone(), b.clone(), 3).map_err(|e| e.to_string())?;
        let ode = beta_density_ode(&params, opts).map_err(|e| e.to_string())?;
        ensure(ode.operator.canonical() == f3_weyl(&a, &b).canonical(), || format!("(a, b) = ({a}, {b})"))?;
    }
    Ok(())
}

fn check_f4(opts: &PowerOptions) -> Result<(), String> {
    let ode = cube_density_ode(4, opts).map_err(|e| e.to_string())?;
    ensure(ode.diff_operator().equivalent(&f4_operator()), || "order-12 operator differs".into())
}

fn check_theta_forms(_: &PowerOptions) -> Result<(), String> {
    let cube = to_theta_form(&cube_char_seed().operator()).map_err(|e| e.to_string())?;
    // the seed is the phi equation divided by 27 t^3
    let want = ThetaForm::from_terms([
        (-2, Polynomial::from_ints(&[15, 54, 27]).scale(&g(1, 27))),
        (-4, Polynomial::from_ints(&[0, 1]).scale(&g(1, 27))),
    ]);
    ensure(cube == want, || format!("cube seed: {cube:?}"))?;
    let (a, b) = (rat(2, 1), rat(3, 1));
    let beta = to_theta_form(&beta_char_seed(&a, &b).map_err(|e| e.to_string())?.operator()).map_err(|e| e.to_string())?;
    let mi = -GaussianRational::i();
    let want = ThetaForm::from_terms([
        (-2, Polynomial::from_ints(&[0, 4, 1])),
        (-1, Polynomial::new(vec![&mi * &g(2, 1), mi.clone()])),
    ]);
    ensure(beta == want, || format!("beta seed: {beta:?}"))
}

fn exponents_at(op: &DiffOperator, point: Point) -> Result<Vec<GaussianRational>, String> {
    let res = indicial(op, point).map_err(|e| e.to_string())?;
    if !res.regular {
        return Err(format!("{} is not regular singular", res.point));
    }
    res.exponents_exact.map(sorted).ok_or_else(|| "exponents are not rational".into())
}

fn check_exponents(_: &PowerOptions) -> Result<(), String> {
    let (a, b) = (rat(2, 1), rat(3, 1));
    let beta = beta_char_seed(&a, &b).map_err(|e| e.to_string())?.operator();
    let got = exponents_at(&beta, Point::Finite(GaussianRational::zero()))?;
    ensure(got == sorted(vec![g(0, 1), g(-4, 1)]), || format!("beta at 0: {got:?}"))?;
    let got = exponents_at(&cube_char_seed().operator(), Point::Infinity)?;
    ensure(got == sorted(vec![g(-1, 3), g(-5, 3)]), || format!("cube at infinity: {got:?}"))
}

fn check_degree_bound(opts: &PowerOptions) -> Result<(), String> {
    let beta = beta_char_seed(&rat(2, 1), &rat(3, 1)).map_err(|e| e.to_string())?;
    let cube = cube_char_seed();
    for n in 1..=4usize {
        for (name, seed, want) in [("beta", &beta, n as i64), ("cube", &cube, 3 * n as i64)] {
            opts.check(n).map_err(|e| e.to_string())?;
            let bound = degree_bound(seed, n).map_err(|e| e.to_string())?;
            let got = power_operator(seed, n).map_err(|e| e.to_string())?.max_kernel_degree() as i64;
            ensure(bound == want && got == want, || format!("{name} n = {n}: bound {bound}, degree {got}"))?;
        }
    }
    Ok(())
}

fn check_ladder(opts: &PowerOptions) -> Result<(), String> {
    let (l1, l2) = (g(-1, 3), g(-5, 3));
    for n in 1..=4usize {
        opts.check(n).map_err(|e| e.to_string())?;
        let p = power_operator(&cube_char_seed(), n).map_err(|e| e.to_string())?;
        let at_inf = exponents_at(&p.operator, Point::Infinity)?;
        ensure(at_inf == sorted(predicted_exponents(&l1, &l2, n).values), || format!("n = {n}: {at_inf:?}"))?;
        let d = p.operator.leading().num().degree().unwrap_or(0) as i64;
        let r = p.operator.order() as i64;
        let density = fourier_exponents(&at_inf, d, r, FourierSide::InfinityToZero).map_err(|e| e.to_string())?;
        let mut want: Vec<GaussianRational> = (0..=n as i64).map(|k| g(n as i64 + 4 * k - 3, 3)).collect();
        want.extend((0..=2 * n as i64 - 2).map(GaussianRational::from_int));
        ensure(sorted(density) == sorted(want), || format!("n = {n}: density exponents at 0"))?;
    }
    Ok(())
}

fn check_uniform(opts: &PowerOptions) -> Result<(), String> {
    for n in 1..=5usize {
        let params = BetaParams::new(rat(1, 1), rat(1, 1), n).map_err(|e| e.to_string())?;
        let ode = beta_density_ode(&params, opts).map_err(|e| e.to_string())?.diff_operator();
        let lead = (0..=n as i64).fold(Polynomial::one(), |acc, k| &acc * &Polynomial::linear_root(&g(k, 1)));
        let mut coeffs = vec![Polynomial::zero(); n];
        coeffs.push(lead);
        let want = DiffOperator::from_polys(coeffs).map_err(|e| e.to_string())?;
        ensure(ode.equivalent(&want), || format!("n = {n}"))?;
    }
    Ok(())
}

fn check_irwin_hall(_: &PowerOptions) -> Result<(), String> {
    for n in 1..=8usize {
        let d = irwin_hall_density(n).map_err(|e| e.to_string())?;
        let s = d
            .c
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, c)| acc + c * num_traits::pow(rat_int((n - j) as i64), n) / rat_int(n as i64));
        ensure(s.is_one(), || format!("n = {n}: sum {s}"))?;
        ensure(d.integral().is_one() && d.is_smooth(), || format!("n = {n}: not a smooth density"))?;
    }
    let two = irwin_hall_density(2).map_err(|e| e.to_string())?;
    ensure(two.c == vec![rat(1, 1), rat(-2, 1)], || format!("n = 2: {:?}", two.c))
}

fn check_eigenvector(_: &PowerOptions) -> Result<(), String> {
    let v = eig_vector(3, 1, &g(1, 1)).map_err(|e| e.to_string())?;
    ensure(v == vec![g(1, 1), g(2, 1), g(1, 1), g(0, 1)], || format!("{v:?}"))
}

fn check_multifactorial(_: &PowerOptions) -> Result<(), String> {
    ensure(multifactorial(-5, 6).is_one(), || "(-5)!6 != 1".into())
}

fn check_phi_leading(_: &PowerOptions) -> Result<(), String> {
    let lead = |t: f64| (2.0 * std::f64::consts::PI).sqrt() / (3.0 * GAMMA_TWO_THIRDS) * t.powf(-1.0 / 3.0);
    let t = 1e8;
    let v = phi_asymptotic(t, 30).map_err(|e| e.to_string())?;
    ensure(((v - lead(t)) / lead(t)).abs() < 1e-9, || format!("t = {t}: {v} vs {}", lead(t)))?;
    let q = phi_quadrature(7.0).map_err(|e| e.to_string())?;
    ensure((q / lead(7.0) - 1.0).abs() < 0.05, || format!("t = 7: {q}"))
}

fn check_full_line(_: &PowerOptions) -> Result<(), String> {
    // cos(t) t^(-1/3) and sin(t) t^(-1/3) on (0, inf), by quadrature on (0, 1)
    // and oscillatory quadrature beyond
    let want = (0.677_058_969_713_200_2, 1.172_700_535_263_500_5);
    let got = full_line(1);
    ensure((got.re - want.0).abs() < 1e-14 && (got.im - want.1).abs() < 1e-14, || format!("{got}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let recs = verify_paper(None, &PowerOptions::default()).unwrap();
        assert_eq!(recs.len(), CHECKS.len());
        for r in recs {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn single_check() {
        let recs = verify_paper(Some("f3"), &PowerOptions::default()).unwrap();
        assert_eq!(recs.len(), 1);
        assert!(verify_paper(Some("nope"), &PowerOptions::default()).is_err());
    }
}
