use holopow::algebra::{laurent_bounds, rat, GaussianRational, LaurentPolynomial, Rational};
use holopow::power::{build_q, PowerOptions};
use holopow::stats::{
    beta_char_seed, beta_density_ode, cube_char_seed, cube_density_ode, f3_weyl, f4_operator, irwin_hall_density, is_real,
    BetaParams,
};
use holopow::weyl::{indicial, Point};
use num_traits::Zero;

fn lowest(l: &LaurentPolynomial) -> (i64, GaussianRational) {
    let k = laurent_bounds(l).mindeg().expect("nonzero");
    (k, l.coeff(k))
}

fn pochhammer(x: &Rational, m: i64) -> Rational {
    (0..m).fold(rat(1, 1), |acc, i| acc * (x + rat(i, 1)))
}

#[test]
fn beta_three_matches_fixture() {
    let opts = PowerOptions::default();
    for (a, b) in [(rat(1, 1), rat(1, 1)), (rat(2, 1), rat(3, 1)), (rat(1, 2), rat(5, 2)), (rat(3, 1), rat(3, 1))] {
        let d = beta_density_ode(&BetaParams::new(a.clone(), b.clone(), 3).unwrap(), &opts).unwrap();
        assert!(is_real(&d.operator));
        let want = f3_weyl(&a, &b).canonical();
        assert_eq!(d.operator, want, "a = {a}, b = {b}");
    }
}

#[test]
fn cube_four_matches_fixture() {
    let d = cube_density_ode(4, &PowerOptions::default()).unwrap();
    assert_eq!(d.order(), 12);
    assert_eq!(d.operator, f4_operator().to_weyl().canonical());
}

#[test]
fn beta_q_leading_terms() {
    let (a, b) = (rat(2, 1), rat(3, 1));
    let s = &a + &b;
    let seed = beta_char_seed(&a, &b).unwrap();
    for n in 1..6usize {
        let q = build_q(&seed, n);
        let nn = rat(n as i64, 1);
        for j in 2..=n + 1 {
            let j64 = j as i64;
            let sign = if j % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            let (k1, c1) = lowest(&q.get(1, j).to_laurent().unwrap());
            assert_eq!(k1, -(j64 - 1));
            assert_eq!(c1, GaussianRational::real(-&sign * &nn * pochhammer(&s, j64 - 1)));
            let (k0, c0) = lowest(&q.get(0, j).to_laurent().unwrap());
            assert_eq!(k0, -(j64 - 1));
            let want = &sign * &nn * &a * pochhammer(&(&s + rat(1, 1)), j64 - 2);
            assert_eq!(c0, GaussianRational::new(rat(0, 1), want), "n={n} j={j}");
        }
        let bounds = laurent_bounds(&q.get(0, n + 1).to_laurent().unwrap());
        assert_eq!(bounds.mindeg(), Some(-(n as i64)));
    }
}

#[test]
fn cube_q_leading_terms() {
    let seed = cube_char_seed();
    for n in 1..6usize {
        let q = build_q(&seed, n);
        let nn = n as i64;
        for j in 2..=n + 1 {
            let j64 = j as i64;
            let sign = if j % 2 == 0 { -1 } else { 1 };
            let (k1, c1) = lowest(&q.get(1, j).to_laurent().unwrap());
            assert_eq!(k1, -3 * (j64 - 1));
            let p3 = Rational::from_integer(3.into()).pow(-3 * (j64 - 1) as i32);
            assert_eq!(c1, GaussianRational::real(rat(sign * nn, 1) * &p3));
            let (k0, c0) = lowest(&q.get(0, j).to_laurent().unwrap());
            assert_eq!(k0, -3 * (j64 - 1) + 1);
            let p3 = Rational::from_integer(3.into()).pow((-3 * (j64 - 1) + 1) as i32);
            assert_eq!(c0, GaussianRational::real(rat(5 * sign * nn, 1) * &p3), "n={n} j={j}");
        }
    }
}

#[test]
fn cube_density_exponents_at_zero() {
    for n in 1..=4usize {
        let op = cube_density_ode(n, &PowerOptions::default()).unwrap().diff_operator();
        let res = indicial(&op, Point::Finite(GaussianRational::zero())).unwrap();
        assert!(res.regular, "n = {n}");
        let mut got = res.exponents_exact.expect("rational exponents");
        let mut want: Vec<GaussianRational> = (0..=n as i64)
            .map(|k| GaussianRational::real(rat(n as i64 + 4 * k - 3, 3)))
            .collect();
        want.extend((0..=2 * n as i64 - 2).map(GaussianRational::from_int));
        let key = |a: &GaussianRational, b: &GaussianRational| a.re.cmp(&b.re);
        got.sort_by(key);
        want.sort_by(key);
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn beta_density_singular_points() {
    let (a, b) = (rat(2, 1), rat(3, 1));
    for n in 1..=5usize {
        let ode = beta_density_ode(&BetaParams::new(a.clone(), b.clone(), n).unwrap(), &PowerOptions::default()).unwrap();
        let lead = ode.operator.coeff_poly(n as u32);
        for k in 0..=n as i64 {
            assert!(lead.eval(&GaussianRational::from_int(k)).is_zero(), "n = {n}, x = {k}");
        }
    }
}

#[test]
fn irwin_hall_pieces_are_annihilated() {
    let one = rat(1, 1);
    for n in 2..=6usize {
        let op = beta_density_ode(&BetaParams::new(one.clone(), one.clone(), n).unwrap(), &PowerOptions::default())
            .unwrap()
            .diff_operator();
        for p in irwin_hall_density(n).unwrap().pieces() {
            assert!(op.apply(&p.into()).is_zero(), "n = {n}");
        }
    }
}
