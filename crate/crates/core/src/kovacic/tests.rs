use super::*;
use crate::exactalg::{rat, Poly};

fn q(p: i64, d: i64) -> FieldElem {
    FieldElem::from_rat(rat(p, d))
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
}

fn mono(k: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; k + 1];
    v[k] = c;
    v
}

/// (4B − 4A z² + (4C − 3) z⁴ − 4ε z⁵)/(16 z⁶)
fn ten_six(a: i64, b: i64, c: i64, e: i64) -> RatFunc {
    rf(&[4 * b, 0, -4 * a, 0, 4 * c - 3, -4 * e], &mono(6, 16))
}

fn twelve_six(a: Rat, b: Rat, c: Rat, e: Rat) -> RatFunc {
    let f = |x: Rat| FieldElem::from_rat(x);
    let four = rat(4, 1);
    let num = Poly::new(vec![
        f(&four * &b),
        FieldElem::zero(),
        FieldElem::zero(),
        f(-(&four * &a)),
        FieldElem::zero(),
        f(&four * &c - rat(3, 1)),
        f(-(&four * &e)),
    ]);
    RatFunc::new(num, Poly::from_ints(&mono(7, 16))).unwrap()
}

use crate::exactalg::Rat;

fn solved(r: &RatFunc) -> ClosedFormSolution {
    match solve(r).unwrap() {
        KovacicVerdict::Integrable(s) => {
            assert!(verify(r, &s), "verify failed for {r}");
            s
        }
        v => panic!("expected integrable for {r}, got {v:?}"),
    }
}

#[test]
fn constant_potential() {
    let s = solved(&RatFunc::one());
    assert_eq!(s.case, 1);
    assert_eq!(s.omega, Omega::Rational(RatFunc::one()));
    assert_eq!(s.prefactor, Poly::one());
    assert_eq!(s.zeta.unwrap().render("x"), "exp(x)");
}

#[test]
fn harmonic_ground_state() {
    let s = solved(&rf(&[1, 0, 1], &[1]));
    assert_eq!(s.omega, Omega::Rational(RatFunc::x()));
    assert_eq!(s.zeta.unwrap().render("x"), "exp(1/2*x^2)");
}

#[test]
fn zero_has_polynomial_basis() {
    let s = solved(&RatFunc::zero());
    assert_eq!(s.origin, Origin::Zero);
    assert_eq!(second_solution(&s).unwrap().render("x"), "integrate(1, x)");
}

#[test]
fn ten_six_a5_case1() {
    let r = ten_six(5, 1, 0, 0);
    let s = solved(&r);
    assert_eq!((s.case, s.n), (1, 0));
    let w = &RatFunc::power(q(1, 2), -3) + &RatFunc::power(q(1, 4), -1);
    assert_eq!(s.omega, Omega::Rational(w.clone()));
    assert_eq!(
        s.origin,
        Origin::Signs(vec![
            (Point::Finite(FieldElem::zero()), Sign::Plus),
            (Point::Infinity, Sign::Minus)
        ])
    );
    // independent check: ω′ + ω² = r
    assert_eq!(&w.derivative() + &(&w * &w), r);
    assert_eq!(s.zeta.as_ref().unwrap().render("z"), "z^(1/4)*exp(-1/(4*z^2))");
    assert_eq!(
        second_solution(&s).unwrap().render("z"),
        "z^(1/4)*exp(-1/(4*z^2))*integrate(z^(-1/2)*exp(1/(2*z^2)), z)"
    );
}

#[test]
fn ten_six_a3_case1() {
    let s = solved(&ten_six(3, 1, 0, 0));
    let w = &RatFunc::power(q(1, 2), -3) + &RatFunc::power(q(3, 4), -1);
    assert_eq!(s.omega, Omega::Rational(w));
}

#[test]
fn ten_six_sweep_matches_remark() {
    for a in 1..=14 {
        let v = solve(&ten_six(a, 1, 0, 0)).unwrap();
        let expect = [3, 5, 11, 13].contains(&a);
        assert_eq!(v.is_integrable(), expect, "A = {a}");
        if let KovacicVerdict::Integrable(s) = &v {
            assert!(verify(&ten_six(a, 1, 0, 0), s));
            if a > 10 {
                assert_eq!(s.n, 2);
            }
        }
    }
}

#[test]
fn twelve_six_witness() {
    let r = twelve_six(rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1));
    match solve(&r).unwrap() {
        KovacicVerdict::NotIntegrable(w) => {
            assert!(matches!(w.case1, CaseFailure::Inapplicable(_)));
            assert_eq!(w.case2, CaseFailure::EmptyD);
            assert!(matches!(w.case3, CaseFailure::Inapplicable(_)));
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn twelve_six_with_angular_momentum_has_nonempty_d() {
    // C = l(l+1) makes √(4C+1) rational; for l ≥ 2 case 2 has candidates
    // but no polynomial.
    for l in 0..5i64 {
        let r = twelve_six(rat(1, 1), rat(1, 1), rat(l * (l + 1), 1), rat(0, 1));
        match solve(&r).unwrap() {
            KovacicVerdict::NotIntegrable(w) => {
                if l >= 2 {
                    assert!(matches!(w.case2, CaseFailure::NoPolynomial { .. }), "l = {l}");
                } else {
                    assert_eq!(w.case2, CaseFailure::EmptyD);
                }
            }
            v => panic!("{v:?}"),
        }
    }
}

#[test]
fn twelve_six_pseudorandom_sweep() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x2545_f491);
    let nz = |rng: &mut StdRng| loop {
        let v = rng.gen_range(-9i64..=9);
        if v != 0 {
            break v;
        }
    };
    for i in 0..20 {
        let a = rat(nz(&mut rng), rng.gen_range(1..=7));
        let b = rat(nz(&mut rng), rng.gen_range(1..=7));
        let c = rat(rng.gen_range(-5..=9), rng.gen_range(1..=5));
        let e = if i % 2 == 0 { rat(0, 1) } else { rat(nz(&mut rng), rng.gen_range(1..=5)) };
        let r = twelve_six(a, b, c, e);
        assert_eq!(solve(&r).unwrap().case(), 4, "{r}");
    }
}

#[test]
fn airy_and_bessel_type() {
    assert_eq!(solve(&RatFunc::x()).unwrap().case(), 4);
    let r = RatFunc::power(FieldElem::one(), -1);
    match solve(&r).unwrap() {
        KovacicVerdict::NotIntegrable(w) => assert_eq!(w.case2, CaseFailure::EmptyD),
        v => panic!("{v:?}"),
    }
}

#[test]
fn case2_algebraic_omega() {
    // r = 1/x − 3/(16x²): ζ = x^{1/4} e^{2√x}
    let r = &RatFunc::power(FieldElem::one(), -1) + &RatFunc::power(q(-3, 16), -2);
    let s = solved(&r);
    assert_eq!((s.case, s.n), (2, 0));
    assert_eq!(s.theta, Some(RatFunc::power(q(1, 2), -1)));
    match &s.omega {
        Omega::Quadratic { b, c } => {
            // discriminant b² − 4c = 4/x
            assert_eq!(&(b * b) - &c.scale(&FieldElem::from_int(4)), RatFunc::power(FieldElem::from_int(4), -1));
        }
        o => panic!("{o:?}"),
    }
    assert!(second_solution(&s).is_err());
}

#[test]
fn case3_tetrahedral_example() {
    // −3/(16x²) − 2/(9(x−1)²) + 3/(16x(x−1))
    let x = RatFunc::x();
    let xm1 = &x - &RatFunc::one();
    let r = &(&RatFunc::power(q(-3, 16), -2) - &(&RatFunc::from_rat(rat(2, 9)) / &(&xm1 * &xm1)))
        + &(&RatFunc::from_rat(rat(3, 16)) / &(&x * &xm1));
    let s = solved(&r);
    assert_eq!(s.case, 3);
    assert_eq!(s.m, Some(4));
    match &s.omega {
        Omega::Minimal { coeffs } => {
            assert_eq!(coeffs.len(), 5);
            assert!(riccati_compatible(&r, coeffs));
        }
        o => panic!("{o:?}"),
    }
}

/// F(ω) = Σ aᵢωⁱ is compatible with ω′ = r − ω² iff F divides
/// F_x + F_ω·(r − ω²) in ℚ(x)[ω].
fn riccati_compatible(r: &RatFunc, a: &[RatFunc]) -> bool {
    let m = a.len() - 1;
    let mut g = vec![RatFunc::zero(); m + 2];
    for (i, ai) in a.iter().enumerate() {
        g[i] = &g[i] + &ai.derivative();
        if i > 0 {
            let t = ai.scale(&FieldElem::from_int(i as i64));
            g[i - 1] = &g[i - 1] + &(&t * r);
            g[i + 1] = &g[i + 1] - &t;
        }
    }
    // long division by F in ω
    for k in (m..=m + 1).rev() {
        let c = &g[k] / &a[m];
        for (j, aj) in a.iter().enumerate() {
            g[k - m + j] = &g[k - m + j] - &(&c * aj);
        }
    }
    g[..m].iter().all(|x| x.is_zero())
}

#[test]
fn alpha_examples() {
    let d = alpha_data(&RatFunc::power(q(-1, 4), -2)).unwrap();
    assert_eq!(d.records.len(), 2);
    for rec in &d.records {
        assert_eq!((rec.alpha_plus.clone(), rec.alpha_minus.clone()), (q(1, 2), q(1, 2)));
    }
    let d = alpha_data(&ten_six(5, 1, 0, 0)).unwrap();
    assert_eq!(d.records[0].situation, Situation::C3);
    assert_eq!((d.records[0].alpha_plus.clone(), d.records[0].alpha_minus.clone()), (q(1, 4), q(11, 4)));
    assert_eq!(d.records[1].situation, Situation::Inf2);
    assert_eq!((d.records[1].alpha_plus.clone(), d.records[1].alpha_minus.clone()), (q(3, 4), q(1, 4)));
    let d = alpha_data(&RatFunc::one()).unwrap();
    assert_eq!(d.records[0].alpha_plus, FieldElem::zero());
    assert_eq!(d.records[0].alpha_minus, FieldElem::zero());
    let d = alpha_data(&twelve_six(rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1))).unwrap();
    assert!(d.inapplicable.is_some());
}

#[test]
fn case_examples() {
    assert!(case1(&RatFunc::one()).unwrap().solution().is_some());
    let s = case2(&RatFunc::one()).unwrap().solution().unwrap();
    assert_eq!(s.omega, Omega::Rational(RatFunc::one()));
    assert!(verify(&RatFunc::one(), &s));
    assert!(matches!(case3(&RatFunc::one()).unwrap(), CaseOutcome::Failed(CaseFailure::Inapplicable(_))));
    let r = RatFunc::power(FieldElem::one(), -1);
    assert_eq!(case2(&r).unwrap(), CaseOutcome::Failed(CaseFailure::EmptyD));
}

#[test]
fn verify_rejects_wrong_omega() {
    let mut s = solved(&RatFunc::one());
    assert!(verify(&RatFunc::one(), &s));
    s.omega = Omega::Rational(RatFunc::from_int(2));
    assert!(!verify(&RatFunc::one(), &s));
}

#[test]
fn irreducible_denominator_is_undecided() {
    let r = rf(&[1], &[-2, 0, 0, 1]);
    assert!(matches!(solve(&r), Err(KovacicError::UnableToDecide(_))));
}

/// r for the Whittaker equation with parameters (κ, μ).
fn whittaker(k: Rat, m: Rat) -> RatFunc {
    let b = (rat(4, 1) * &m * &m - rat(1, 1)) / rat(4, 1);
    &(&RatFunc::from_rat(rat(1, 4)) - &RatFunc::power(FieldElem::from_rat(k), -1))
        + &RatFunc::power(FieldElem::from_rat(b), -2)
}

fn half_plus_nat(x: &Rat) -> bool {
    let y = x - rat(1, 2);
    y.is_integer() && y >= rat(0, 1)
}

#[test]
fn whittaker_grid_agrees_with_membership() {
    let kappas = [0, 1, -1, 3, -3, 4, -4, 5, -5, 8, -8];
    let mus = [1, 2, 3, 4];
    for &k in &kappas {
        for &m in &mus {
            let (k, m) = (rat(k, 8), rat(m, 8));
            let member = [&k + &m, &k - &m, -&k + &m, -&k - &m].iter().any(half_plus_nat);
            let v = solve(&whittaker(k.clone(), m.clone())).unwrap();
            assert_eq!(v.is_integrable(), member, "κ = {k}, μ = {m}");
            if let KovacicVerdict::Integrable(s) = &v {
                assert!(verify(&whittaker(k, m), s));
            }
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn fixtures() -> Vec<RatFunc> {
        vec![
            RatFunc::one(),
            rf(&[1, 0, 1], &[1]),
            ten_six(5, 1, 0, 0),
            ten_six(4, 1, 0, 0),
            ten_six(3, 1, 0, 0),
            twelve_six(rat(1, 1), rat(1, 1), rat(0, 1), rat(1, 1)),
            RatFunc::power(FieldElem::one(), -1),
            whittaker(rat(5, 8), rat(1, 8)),
            whittaker(rat(0, 1), rat(1, 4)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn affine_scaling_keeps_classification(p in 1i64..5, qd in 1i64..4, neg in any::<bool>(), idx in 0usize..9) {
            let c = FieldElem::from_rat(rat(if neg { -p } else { p }, qd));
            let r = fixtures().swap_remove(idx);
            let scaled = r.scale_arg(&c).scale(&(&c * &c));
            let a = solve(&r).unwrap();
            let b = solve(&scaled).unwrap();
            prop_assert_eq!(a.is_integrable(), b.is_integrable());
            if let KovacicVerdict::Integrable(s) = &b {
                prop_assert!(verify(&scaled, s));
            }
        }
    }
}
