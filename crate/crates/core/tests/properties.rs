use holopow::algebra::{
    laurent_bounds, mat_vec, poly_gcd, rat, solve_exact, DegreeBounds, GaussianRational, LaurentPolynomial, Polynomial,
    RationalFunction,
};
use holopow::power::{
    build_q, char_poly, degree_bound, diagonal_value, eig_matrix, power_operator, predicted_exponents, SecondOrderSeed,
};
use holopow::weyl::{indicial, to_theta_form, DiffOperator, Point, ThetaForm, WeylElement};
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn gq() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(a, b, d)| GaussianRational::new(rat(a, d), rat(b, d)))
}

fn real_q() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, d)| GaussianRational::from_ratio(a, d))
}

fn nonzero_gq() -> impl Strategy<Value = GaussianRational> {
    gq().prop_filter("nonzero", |c| !c.is_zero())
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(gq(), 0..=max_len).prop_map(Polynomial::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RationalFunction::new(n, d))
}

fn weyl(max_deg: u32, max_terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), gq()), 0..=max_terms).prop_map(WeylElement::from_terms)
}

/// Laurent polynomial with nonzero end coefficients at `lo` and `hi`.
fn laurent_span(lo: i64, hi: i64) -> impl Strategy<Value = LaurentPolynomial> {
    let inner = (hi - lo - 1).max(0) as usize;
    (nonzero_gq(), prop::collection::vec(gq(), inner), nonzero_gq()).prop_map(move |(a, mid, b)| {
        if lo == hi {
            return LaurentPolynomial::monomial(a, lo);
        }
        let mut c = vec![a];
        c.extend(mid);
        c.push(b);
        LaurentPolynomial::new(lo, c)
    })
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-3i64..=2, 0i64..=3).prop_flat_map(|(lo, w)| laurent_span(lo, lo + w))
}

/// Laurent seeds meeting `m1 <= -1 <= M1`, `m0 >= 2 m1`, `M0 <= 2 M1`.
fn hypothesis_seed() -> impl Strategy<Value = SecondOrderSeed> {
    (-2i64..=-1, -1i64..=1, any::<bool>())
        .prop_flat_map(|(m1, big_m1, zero_a0)| {
            let a1 = laurent_span(m1, big_m1);
            let a0 = (2 * m1..=2 * big_m1)
                .prop_flat_map(move |m0| (Just(m0), m0..=2 * big_m1))
                .prop_flat_map(move |(m0, big_m0)| laurent_span(m0, big_m0.min(m0 + 2)))
                .prop_map(move |p| if zero_a0 { LaurentPolynomial::zero() } else { p });
            (a0, a1)
        })
        .prop_map(|(a0, a1)| SecondOrderSeed::from_laurent(&a0, &a1))
}

fn laurent_seed() -> impl Strategy<Value = SecondOrderSeed> {
    (laurent(), laurent()).prop_map(|(a0, a1)| SecondOrderSeed::from_laurent(&a0, &a1))
}

/// `x^2 f'' = c1 x f' + c0 f` with exponents `lambda1, lambda2`.
fn euler_seed(l1: &GaussianRational, l2: &GaussianRational) -> SecondOrderSeed {
    let one = GaussianRational::one();
    let c1 = &(l1 + l2) - &one;
    let c0 = -(l1 * l2);
    SecondOrderSeed::from_laurent(&LaurentPolynomial::monomial(c0, -2), &LaurentPolynomial::monomial(c1, -1))
}

fn laurent_op() -> impl Strategy<Value = DiffOperator> {
    prop::collection::vec(laurent(), 1..=4)
        .prop_filter("nonzero leading", |c| !c.last().unwrap().is_zero())
        .prop_map(|c| DiffOperator::new(c.iter().map(|p| p.to_rational_function()).collect()).unwrap())
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

// algebra

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn rational_functions_form_a_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RationalFunction::zero(), a.clone());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn gcd_recovers_common_factor(p in nonzero_poly(4), q in nonzero_poly(4), g in nonzero_poly(3)) {
        prop_assume!(poly_gcd(&p, &q).degree() == Some(0));
        let h = poly_gcd(&(&p * &g), &(&q * &g));
        prop_assert_eq!(h.monic(), g.monic());
    }

    #[test]
    fn laurent_bounds_add(p in laurent(), q in laurent()) {
        let (bp, bq) = (laurent_bounds(&p), laurent_bounds(&q));
        let want = DegreeBounds::Finite {
            mindeg: bp.mindeg().unwrap() + bq.mindeg().unwrap(),
            maxdeg: bp.maxdeg().unwrap() + bq.maxdeg().unwrap(),
        };
        prop_assert_eq!(laurent_bounds(&(&p * &q)), want);
    }

    #[test]
    fn solve_exact_reproduces_rhs(n in 1usize..=5, seed in prop::collection::vec(gq(), 30), rhs in prop::collection::vec(gq(), 5)) {
        let m: Vec<Vec<GaussianRational>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        if let Ok(x) = solve_exact(&m, &rhs[..n]) {
            prop_assert_eq!(mat_vec(&m, &x), rhs[..n].to_vec());
        }
    }
}

// weyl

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn weyl_mul_is_associative(u in weyl(3, 4), v in weyl(3, 4), w in weyl(2, 3)) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
    }

    #[test]
    fn fourier_is_a_homomorphism(u in weyl(3, 5), v in weyl(3, 5)) {
        prop_assert_eq!((&u * &v).fourier(), &u.fourier() * &v.fourier());
        prop_assert_eq!((&u + &v).fourier(), &u.fourier() + &v.fourier());
    }

    #[test]
    fn fourier_squared_reflects(w in weyl(6, 8)) {
        prop_assert_eq!(w.fourier().fourier(), w.reflect());
    }

    #[test]
    fn theta_form_round_trips(op in laurent_op(), w in weyl(4, 6)) {
        prop_assert_eq!(to_theta_form(&op).unwrap().to_operator().unwrap(), op);
        let (s, back) = ThetaForm::from_weyl(&w).to_weyl();
        prop_assert_eq!(back, w.mul_x_pow(s));
    }

    #[test]
    fn regular_exponents_are_exact_and_numeric(
        roots in prop::collection::vec(real_q(), 1..=4),
        tail in prop::collection::vec(gq(), 5),
    ) {
        let lead = roots.iter().fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear_root(r));
        let r = roots.len();
        let op = ThetaForm::from_terms([(0, lead), (1, Polynomial::new(tail[..=r].to_vec()))]).to_operator().unwrap();
        let res = indicial(&op, Point::Finite(GaussianRational::zero())).unwrap();
        prop_assert!(res.regular);
        let exact = res.exponents_exact.clone().expect("rational exponents");
        let mut want = roots.clone();
        want.sort_by(|a, b| a.re.cmp(&b.re));
        prop_assert_eq!(&exact, &want);
        for (z, e) in res.exponents_numeric.iter().zip(&exact) {
            prop_assert!((z - e.to_complex()).norm() < 1e-10);
        }
    }
}

#[test]
fn commutator_is_one() {
    let (x, d) = (WeylElement::x(), WeylElement::dx());
    assert_eq!(&(&d * &x) - &(&x * &d), WeylElement::one());
}

// power

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn q_is_upper_triangular(seed in laurent_seed(), n in 1usize..=6) {
        let q = build_q(&seed, n);
        for i in 0..=n {
            for j in 0..i {
                prop_assert!(q.get(i, j).is_zero(), "q[{i}][{j}]");
            }
            prop_assert_eq!(q.get(i, i), &diagonal_value(n, i));
        }
    }

    #[test]
    fn first_power_recovers_seed(seed in laurent_seed(), a0 in ratfunc(), use_rf in any::<bool>()) {
        let seed = if use_rf { SecondOrderSeed::new(a0, seed.a1.clone()) } else { seed };
        let p = power_operator(&seed, 1).unwrap();
        prop_assert!(p.operator.equivalent(&seed.operator()));
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn kernel_degree_within_bound(seed in hypothesis_seed(), n in 1usize..=5) {
        let bound = degree_bound(&seed, n).unwrap();
        let p = power_operator(&seed, n).unwrap();
        prop_assert!(p.max_kernel_degree() as i64 <= bound, "{} > {bound}", p.max_kernel_degree());
    }

    #[test]
    fn q_first_row_lowest_degrees(seed in hypothesis_seed(), n in 1usize..=5) {
        let (a0, a1) = seed.laurent().unwrap();
        let m1 = a1.bounds().mindeg().unwrap();
        let low = a0.bounds().mindeg().map_or(m1, |m0| m0.min(2 * m1));
        let q = build_q(&seed, n);
        for j in 2..=n + 1 {
            if let Some(l) = q.get(0, j).to_laurent() {
                if let Some(m) = l.bounds().mindeg() {
                    prop_assert!(m >= low + (j as i64 - 2) * m1, "j = {j}: {m}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(config(25))]

    #[test]
    fn euler_power_exponents(l1 in real_q(), l2 in gq(), n in 1usize..=6) {
        let p = power_operator(&euler_seed(&l1, &l2), n).unwrap();
        let res = indicial(&p.operator, Point::Finite(GaussianRational::zero())).unwrap();
        prop_assert!(res.regular);
        let poly = res.poly.clone().unwrap();
        for v in predicted_exponents(&l1, &l2, n).values {
            prop_assert!(poly.eval(&v).is_zero());
        }
        prop_assert_eq!(poly, char_poly(&eig_matrix(&l1, &l2, n)));
    }

    #[test]
    fn euler_powers_are_annihilated(l in -9i64..=9, d in 1i64..=3, l2 in real_q(), n in 1usize..=6) {
        let l1 = GaussianRational::from_ratio(l, d);
        let p = power_operator(&euler_seed(&l1, &l2), n).unwrap();
        let e = n as f64 * l as f64 / d as f64;
        for x in [0.6f64, 0.9, 1.3, 1.7, 2.2] {
            // derivatives of x^e
            let stack: Vec<Complex64> = (0..=n + 1)
                .map(|k| {
                    let f: f64 = (0..k).map(|i| e - i as f64).product();
                    Complex64::new(f * x.powf(e - k as f64), 0.0)
                })
                .collect();
            let coeffs = p.operator.coeffs_at(Complex64::new(x, 0.0)).unwrap();
            let scale: f64 = coeffs.iter().zip(&stack).map(|(a, b)| (a * b).norm()).sum::<f64>().max(1.0);
            let r = p.operator.residual(Complex64::new(x, 0.0), &stack).unwrap().norm();
            prop_assert!(r < 1e-9 * scale, "x = {x}: {r:e}");
        }
    }
}

#[test]
fn sine_powers_are_annihilated() {
    let seed = SecondOrderSeed::from_laurent(&LaurentPolynomial::monomial(GaussianRational::from_int(-1), 0), &LaurentPolynomial::zero());
    for n in 1..=6usize {
        let p = power_operator(&seed, n).unwrap();
        for x in [0.3, 0.7, 1.1, 1.9, 2.5, 3.0, 4.2, 5.0, 5.5, 6.1] {
            // sin^n x = (2i)^-n sum_k C(n,k) (-1)^k e^{i(n-2k)x}
            let stack: Vec<Complex64> = (0..=n + 1)
                .map(|j| {
                    let mut s = Complex64::new(0.0, 0.0);
                    let mut binom = 1.0;
                    for k in 0..=n {
                        let w = (n as f64) - 2.0 * k as f64;
                        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                        s += sign * binom * Complex64::new(0.0, w).powu(j as u32) * Complex64::new(0.0, w * x).exp();
                        binom = binom * (n - k) as f64 / (k + 1) as f64;
                    }
                    s / Complex64::new(0.0, 2.0).powu(n as u32)
                })
                .collect();
            let r = p.operator.residual(Complex64::new(x, 0.0), &stack).unwrap().norm();
            assert!(r < 1e-9, "n={n} x={x}: {r:e}");
        }
    }
}
