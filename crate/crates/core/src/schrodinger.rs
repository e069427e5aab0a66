//! Radial Schrödinger equations with generalized Lennard-Jones potentials
//! `−Ā/r^ν + B̄/r^δ + C̄/r²`, their reduction to `y″ = r·y`, and the
//! zero-energy integrability criteria (Whittaker/Martinet–Ramis, Bessel).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::{
    exp_integral, rat, AlgError, ExpForm, FieldCtx, FieldElem, Poly, Rat, RatFunc,
};
use crate::kovacic::{self, KovacicError, KovacicVerdict};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchrodingerError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("the z = r² change needs even exponents, got ν = {nu}, δ = {delta}")]
    OddExponent { nu: u32, delta: u32 },
    #[error("only zero energy is covered, got ε = {0}")]
    NonzeroEnergy(String),
    #[error("the criterion needs δ = 2ν − 2, got ν = {nu}, δ = {delta}")]
    WrongFamily { nu: u32, delta: u32 },
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("Martinet–Ramis and Kovacic disagree: {0}")]
    MethodDisagreement(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Kovacic(#[from] KovacicError),
}

/// `(ν, δ, Ā, B̄, C̄, ε)`. Physical mode requires `Ā, B̄ > 0` and `C̄ ≥ 0`;
/// `formal` lifts these sign conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LJParams {
    pub nu: u32,
    pub delta: u32,
    pub a_bar: Rat,
    pub b_bar: Rat,
    pub c_bar: Rat,
    pub energy: Rat,
    pub formal: bool,
}

impl LJParams {
    pub fn new(
        nu: u32,
        delta: u32,
        a_bar: Rat,
        b_bar: Rat,
        c_bar: Rat,
        energy: Rat,
        formal: bool,
    ) -> Result<Self, SchrodingerError> {
        if nu < 3 || delta <= nu {
            return Err(SchrodingerError::InvalidParams(format!(
                "need 3 ≤ ν < δ, got ν = {nu}, δ = {delta}"
            )));
        }
        if !formal && (!a_bar.is_positive() || !b_bar.is_positive() || c_bar.is_negative()) {
            return Err(SchrodingerError::InvalidParams(
                "physical mode needs Ā > 0, B̄ > 0, C̄ ≥ 0 (use formal mode to lift this)".into(),
            ));
        }
        if formal && (a_bar.is_zero() && b_bar.is_zero()) {
            return Err(SchrodingerError::InvalidParams("Ā and B̄ both vanish".into()));
        }
        Ok(LJParams {
            nu,
            delta,
            a_bar,
            b_bar,
            c_bar,
            energy,
            formal,
        })
    }

    /// Parameters with `C̄ = l(l+1)` from the angular momentum `l`.
    pub fn with_angular_momentum(
        nu: u32,
        delta: u32,
        a_bar: Rat,
        b_bar: Rat,
        l: u32,
        energy: Rat,
    ) -> Result<Self, SchrodingerError> {
        let c = rat(l as i64 * (l as i64 + 1), 1);
        Self::new(nu, delta, a_bar, b_bar, c, energy, false)
    }
}

/// `−Ā/r^ν + B̄/r^δ + C̄/r²` as a function of `r`.
pub fn effective_potential(p: &LJParams) -> RatFunc {
    let t = |c: &Rat, k: u32| RatFunc::power(FieldElem::from_rat(c.clone()), -(k as i64));
    &(&t(&-p.a_bar.clone(), p.nu) + &t(&p.b_bar, p.delta)) + &t(&p.c_bar, 2)
}

/// Normal form of `y″ + a y′ + b y = 0`: `r = a²/4 + a′/2 − b`, together with
/// the multiplier `exp(−½∫a)` that maps solutions of `y″ = r y` back.
pub fn reduce_to_normal(
    a: &RatFunc,
    b: &RatFunc,
    ctx: &mut FieldCtx,
) -> Result<(RatFunc, ExpForm), SchrodingerError> {
    let quarter = FieldElem::from_rat(rat(1, 4));
    let half = FieldElem::from_rat(rat(1, 2));
    let r = &(&(a * a).scale(&quarter) + &a.derivative().scale(&half)) - b;
    let mult = exp_integral(&a.scale(&-half), ctx)?;
    Ok((r, mult))
}

/// Algebraic form `y″ + ½(α′/α) y′ − (f/α) y = 0` after a Hamiltonian change
/// of variable with `α = (dz/dx)²` written in `z`.
pub fn algebrize(f: &RatFunc, alpha: &RatFunc) -> Result<(RatFunc, RatFunc), SchrodingerError> {
    if alpha.is_zero() {
        return Err(SchrodingerError::InvalidParams("α must not vanish".into()));
    }
    let a = (&alpha.derivative() / alpha).scale(&FieldElem::from_rat(rat(1, 2)));
    let b = -&(f / alpha);
    Ok((a, b))
}

/// `(a, b)` of the z-equation and `f = v_eff(√z) − ε` for `z = r²`.
fn z_equation(p: &LJParams) -> Result<(RatFunc, RatFunc), SchrodingerError> {
    let odd = || SchrodingerError::OddExponent {
        nu: p.nu,
        delta: p.delta,
    };
    if p.nu % 2 == 1 || p.delta % 2 == 1 {
        return Err(odd());
    }
    let v = effective_potential(p).even_to_square().ok_or_else(odd)?;
    let f = &v - &RatFunc::from_rat(p.energy.clone());
    let alpha = RatFunc::from_poly(Poly::from_ints(&[0, 4]));
    algebrize(&f, &alpha)
}

/// Kovacic-ready coefficient of the LJ problem in `z = r²`.
pub fn lj_normal_form(p: &LJParams) -> Result<RatFunc, SchrodingerError> {
    let (a, b) = z_equation(p)?;
    let mut ctx = FieldCtx::new();
    Ok(reduce_to_normal(&a, &b, &mut ctx)?.0)
}

/// Runs Kovacic on the normal form and maps a closed-form solution back to
/// the radial function `u(r)`.
pub fn radial_solution(p: &LJParams) -> Result<(KovacicVerdict, Option<ExpForm>), SchrodingerError> {
    let (a, b) = z_equation(p)?;
    let mut ctx = FieldCtx::new();
    let (r, mult) = reduce_to_normal(&a, &b, &mut ctx)?;
    let verdict = kovacic::solve_in(&r, &mut ctx)?;
    let u = match &verdict {
        KovacicVerdict::Integrable(sol) => sol.zeta.as_ref().map(|z| unwind(z, &mult)),
        KovacicVerdict::NotIntegrable(_) => None,
    };
    Ok((verdict, u))
}

/// `u(r) = (multiplier · ζ)(z = r²)`.
pub fn unwind(zeta: &ExpForm, multiplier: &ExpForm) -> ExpForm {
    zeta.mul(multiplier).compose_square()
}

/// `(r, value) ↦ (r, r·value)`.
pub fn radial_effective_transform(samples: &[(f64, f64)]) -> Result<Vec<(f64, f64)>, SchrodingerError> {
    map_radial(samples, |r, v| r * v)
}

/// `(r, value) ↦ (r, value/r)`.
pub fn radial_effective_inverse(samples: &[(f64, f64)]) -> Result<Vec<(f64, f64)>, SchrodingerError> {
    map_radial(samples, |r, v| v / r)
}

fn map_radial(
    samples: &[(f64, f64)],
    f: impl Fn(f64, f64) -> f64,
) -> Result<Vec<(f64, f64)>, SchrodingerError> {
    samples
        .iter()
        .map(|&(r, v)| {
            if r > 0.0 {
                Ok((r, f(r, v)))
            } else {
                Err(SchrodingerError::NonPositiveRadius(r))
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerParams {
    pub kappa: FieldElem,
    pub mu: FieldElem,
}

/// `1/4 − κ/x + (4μ² − 1)/(4x²)`.
pub fn whittaker_r(w: &WhittakerParams) -> RatFunc {
    let b = &(&(&w.mu * &w.mu) * &FieldElem::from_int(4)) - &FieldElem::one();
    &(&RatFunc::from_rat(rat(1, 4)) - &RatFunc::power(w.kappa.clone(), -1))
        + &RatFunc::power(&b * &FieldElem::from_rat(rat(1, 4)), -2)
}

fn in_half_plus_nat(x: &FieldElem) -> bool {
    match x.as_rat() {
        Some(q) => {
            let y = q - rat(1, 2);
            y.is_integer() && !y.is_negative()
        }
        None => false,
    }
}

/// Whittaker integrability: one of `±κ ± μ` lies in `½ + ℕ` (`0 ∈ ℕ`).
/// Decided exactly, also for irrational parameters.
pub fn martinet_ramis(w: &WhittakerParams) -> bool {
    let (k, m) = (&w.kappa, &w.mu);
    [k + m, k - m, &(-k) + m, &(-k) - m].iter().any(in_half_plus_nat)
}

/// Bessel integrability: `n ∈ ½ + ℤ`.
pub fn bessel_integrable(n: &Rat) -> bool {
    (n - rat(1, 2)).is_integer()
}

fn require_zero_energy(p: &LJParams) -> Result<(), SchrodingerError> {
    if p.energy.is_zero() {
        Ok(())
    } else {
        Err(SchrodingerError::NonzeroEnergy(p.energy.to_string()))
    }
}

/// `κ = Ā/(√B̄(2ν−4))`, `μ = √(1+4C̄)/(2ν−4)` at zero energy.
pub fn lj_whittaker_params(p: &LJParams, ctx: &mut FieldCtx) -> Result<WhittakerParams, SchrodingerError> {
    require_zero_energy(p)?;
    let two_nu_4 = FieldElem::from_int(2 * p.nu as i64 - 4);
    let sb = ctx.sqrt(&FieldElem::from_rat(p.b_bar.clone()))?;
    if sb.is_zero() {
        return Err(SchrodingerError::InvalidParams("B̄ must not vanish".into()));
    }
    let sc = ctx.sqrt(&FieldElem::from_rat(rat(1, 1) + rat(4, 1) * &p.c_bar))?;
    Ok(WhittakerParams {
        kappa: &FieldElem::from_rat(p.a_bar.clone()) / &(&sb * &two_nu_4),
        mu: &sc / &two_nu_4,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    MartinetRamis,
    Kovacic,
    Both,
}

/// `A = s₁√B̄(s₂√(1+4C̄) + ν − 2 + m(2ν − 4))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub m: i64,
    pub outer_plus: bool,
    pub inner_plus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrabilityVerdict {
    pub integrable: bool,
    pub witnesses: Vec<Witness>,
    pub method: Method,
    pub whittaker: WhittakerParams,
    /// Kovacic's verdict on the normal form, when it could run.
    pub kovacic: Option<KovacicVerdict>,
    /// The radial solution recovered from Kovacic, when rational ω.
    pub radial: Option<ExpForm>,
}

pub const DEFAULT_WITNESS_RANGE: i64 = 64;

/// Zero-energy decision for the `(2ν−2)`–`ν` family. Solves for `m`
/// directly and reports witnesses with `|m| ≤ m_limit`; for even ν the
/// Kovacic verdict on the normal form is computed and must agree.
pub fn integrable_zero_energy(p: &LJParams, m_limit: i64) -> Result<IntegrabilityVerdict, SchrodingerError> {
    require_zero_energy(p)?;
    if p.delta != 2 * p.nu - 2 {
        return Err(SchrodingerError::WrongFamily {
            nu: p.nu,
            delta: p.delta,
        });
    }
    let mut ctx = FieldCtx::new();
    let w = lj_whittaker_params(p, &mut ctx)?;
    let integrable = martinet_ramis(&w);
    let sb = ctx.sqrt(&FieldElem::from_rat(p.b_bar.clone()))?;
    let sc = ctx.sqrt(&FieldElem::from_rat(rat(1, 1) + rat(4, 1) * &p.c_bar))?;
    let a = FieldElem::from_rat(p.a_bar.clone());
    let nu = p.nu as i64;
    let mut witnesses = Vec::new();
    for outer_plus in [true, false] {
        for inner_plus in [true, false] {
            let s1 = if outer_plus { a.clone() } else { -&a };
            let s2 = if inner_plus { sc.clone() } else { -&sc };
            let m = &(&(&(&s1 / &sb) - &s2) - &FieldElem::from_int(nu - 2))
                / &FieldElem::from_int(2 * nu - 4);
            if let Some(m) = m.as_integer().and_then(|m: BigInt| m.to_i64()) {
                if m.abs() <= m_limit {
                    witnesses.push(Witness {
                        m,
                        outer_plus,
                        inner_plus,
                    });
                }
            }
        }
    }
    witnesses.sort();
    let (kov, radial, method) = match radial_solution(p) {
        Ok((v, u)) => {
            if v.is_integrable() != integrable {
                return Err(SchrodingerError::MethodDisagreement(format!(
                    "Martinet–Ramis says {integrable}, Kovacic returned case {}",
                    v.case()
                )));
            }
            (Some(v), u, Method::Both)
        }
        Err(SchrodingerError::OddExponent { .. }) | Err(SchrodingerError::Kovacic(KovacicError::UnableToDecide(_))) => {
            (None, None, Method::MartinetRamis)
        }
        Err(e) => return Err(e),
    };
    Ok(IntegrabilityVerdict {
        integrable,
        witnesses,
        method,
        whittaker: w,
        kovacic: kov,
        radial,
    })
}

/// All `±√B̄(±√(1+4C̄) + ν − 2 + m(2ν − 4))` for `m` in the range, sorted.
pub fn enumerate_integrable_a(
    b_bar: &Rat,
    c_bar: &Rat,
    nu: u32,
    m_min: i64,
    m_max: i64,
) -> Result<Vec<FieldElem>, SchrodingerError> {
    if !b_bar.is_positive() || nu < 3 {
        return Err(SchrodingerError::InvalidParams("need B̄ > 0 and ν ≥ 3".into()));
    }
    let mut ctx = FieldCtx::new();
    let sb = ctx.sqrt(&FieldElem::from_rat(b_bar.clone()))?;
    let sc = ctx.sqrt(&FieldElem::from_rat(rat(1, 1) + rat(4, 1) * c_bar))?;
    let nu = nu as i64;
    let mut out: Vec<FieldElem> = Vec::new();
    for m in m_min..=m_max {
        let base = FieldElem::from_int(nu - 2 + m * (2 * nu - 4));
        for inner in [&base + &sc, &base - &sc] {
            let v = &sb * &inner;
            out.push(v.clone());
            out.push(-&v);
        }
    }
    out.sort_by(|a, b| a.cmp_real(b));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rat {
        rat(p, d)
    }

    fn lj(nu: u32, delta: u32, a: i64, b: i64, c: i64, e: i64) -> LJParams {
        LJParams::new(nu, delta, q(a, 1), q(b, 1), q(c, 1), q(e, 1), true).unwrap()
    }

    fn rf(num: &[i64], den_deg: usize, den_c: i64) -> RatFunc {
        let mut d = vec![0; den_deg + 1];
        d[den_deg] = den_c;
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(&d)).unwrap()
    }

    #[test]
    fn effective_potentials() {
        let mut n = vec![0; 7];
        n[0] = 1;
        n[6] = -1;
        assert_eq!(effective_potential(&lj(6, 12, 1, 1, 0, 0)), rf(&n, 12, 1));
        assert_eq!(effective_potential(&lj(6, 10, 5, 1, 0, 0)), rf(&[1, 0, 0, 0, -5], 10, 1));
        let mut n = vec![0; 11];
        n[0] = 4;
        n[6] = -4;
        n[10] = 2;
        assert_eq!(effective_potential(&lj(6, 12, 4, 4, 2, 0)), rf(&n, 12, 1));
    }

    #[test]
    fn normal_form_reduction() {
        let mut ctx = FieldCtx::new();
        let (r, m) = reduce_to_normal(&RatFunc::zero(), &RatFunc::from_int(-1), &mut ctx).unwrap();
        assert_eq!(r, RatFunc::one());
        assert_eq!(m, ExpForm::one());
        let inv_x = RatFunc::power(FieldElem::one(), -1);
        let (r, m) = reduce_to_normal(&inv_x, &RatFunc::zero(), &mut ctx).unwrap();
        assert_eq!(r, RatFunc::power(FieldElem::from_rat(q(-1, 4)), -2));
        assert_eq!(m.render("x"), "x^(-1/2)");
    }

    #[test]
    fn algebrization_examples() {
        let four_z = RatFunc::from_poly(Poly::from_ints(&[0, 4]));
        let (a, b) = algebrize(&RatFunc::x(), &four_z).unwrap();
        assert_eq!(a, RatFunc::power(FieldElem::from_rat(q(1, 2)), -1));
        assert_eq!(b, RatFunc::from_rat(q(-1, 4)));
        let (a, b) = algebrize(&RatFunc::one(), &RatFunc::one()).unwrap();
        assert_eq!((a, b), (RatFunc::zero(), RatFunc::from_int(-1)));
    }

    #[test]
    fn twelve_six_normal_forms() {
        // (−4εz⁶ + (4C−3)z⁵ − 4Az³ + 4B)/(16z⁷)
        assert_eq!(lj_normal_form(&lj(6, 12, 1, 1, 0, 0)).unwrap(), rf(&[4, 0, 0, -4, 0, -3], 7, 16));
        assert_eq!(
            lj_normal_form(&lj(6, 12, 1, 1, 0, 1)).unwrap(),
            rf(&[4, 0, 0, -4, 0, -3, -4], 7, 16)
        );
        assert_eq!(
            lj_normal_form(&lj(6, 12, 1, 1, 2, 1)).unwrap(),
            rf(&[4, 0, 0, -4, 0, 5, -4], 7, 16)
        );
        assert_eq!(lj_normal_form(&lj(6, 10, 5, 1, 0, 0)).unwrap(), rf(&[4, 0, -20, 0, -3], 6, 16));
        assert!(matches!(
            lj_normal_form(&lj(5, 8, 1, 1, 0, 0)),
            Err(SchrodingerError::OddExponent { .. })
        ));
    }

    #[test]
    fn twelve_six_pole_structure() {
        for (a, b, c, e) in [(1, 1, 0, 0), (3, 2, 2, 0), (1, 5, 6, -2), (-2, 3, 0, 7)] {
            let r = lj_normal_form(&lj(6, 12, a, b, c, e)).unwrap();
            let mut ctx = FieldCtx::new();
            let p = crate::exactalg::poles(&r, &mut ctx).unwrap();
            assert_eq!(p.len(), 1);
            assert_eq!(p[0].order, 7);
            assert_eq!(r.order_at_infinity().unwrap(), if e == 0 { 2 } else { 1 });
            assert_eq!(kovacic::solve(&r).unwrap().case(), 4);
        }
    }

    #[test]
    fn radial_unwinding() {
        let (_, u) = radial_solution(&lj(6, 10, 5, 1, 0, 0)).unwrap();
        assert_eq!(u.unwrap().render("r"), "exp(-1/(4*r^4))");
        let (_, u) = radial_solution(&lj(6, 10, 3, 1, 0, 0)).unwrap();
        assert_eq!(u.unwrap().render("r"), "r*exp(-1/(4*r^4))");
    }

    #[test]
    fn radial_transform_roundtrip() {
        let s = vec![(1.0, 1.0), (2.0, 3.0)];
        assert_eq!(radial_effective_transform(&s).unwrap(), vec![(1.0, 1.0), (2.0, 6.0)]);
        assert_eq!(radial_effective_transform(&[(1.0, 0.0)]).unwrap(), vec![(1.0, 0.0)]);
        let back = radial_effective_inverse(&radial_effective_transform(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert!(radial_effective_transform(&[(0.0, 1.0)]).is_err());
    }

    fn wp(k: (i64, i64), m: (i64, i64)) -> WhittakerParams {
        WhittakerParams {
            kappa: FieldElem::from_rat(q(k.0, k.1)),
            mu: FieldElem::from_rat(q(m.0, m.1)),
        }
    }

    #[test]
    fn whittaker_examples() {
        assert_eq!(whittaker_r(&wp((0, 1), (1, 2))), RatFunc::from_rat(q(1, 4)));
        let r = whittaker_r(&wp((5, 8), (1, 8)));
        let expect = &(&RatFunc::from_rat(q(1, 4)) - &RatFunc::power(FieldElem::from_rat(q(5, 8)), -1))
            + &RatFunc::power(FieldElem::from_rat(q(-15, 64)), -2);
        assert_eq!(r, expect);
        assert_eq!(
            whittaker_r(&wp((1, 1), (1, 2))),
            &RatFunc::from_rat(q(1, 4)) - &RatFunc::power(FieldElem::one(), -1)
        );
        assert_eq!(whittaker_r(&wp((3, 7), (2, 5))), whittaker_r(&wp((3, 7), (-2, 5))));
    }

    #[test]
    fn membership_examples() {
        assert!(martinet_ramis(&wp((5, 8), (1, 8))));
        assert!(martinet_ramis(&wp((3, 8), (1, 8))));
        assert!(!martinet_ramis(&wp((0, 1), (1, 4))));
        for (n, ok) in [((1, 2), true), ((1, 1), false), ((-3, 2), true), ((0, 1), false)] {
            assert_eq!(bessel_integrable(&q(n.0, n.1)), ok);
        }
    }

    #[test]
    fn whittaker_parameters() {
        let mut ctx = FieldCtx::new();
        assert_eq!(lj_whittaker_params(&lj(6, 10, 5, 1, 0, 0), &mut ctx).unwrap(), wp((5, 8), (1, 8)));
        assert_eq!(lj_whittaker_params(&lj(6, 10, 3, 1, 0, 0), &mut ctx).unwrap(), wp((3, 8), (1, 8)));
        assert_eq!(lj_whittaker_params(&lj(6, 10, 5, 1, 2, 0), &mut ctx).unwrap(), wp((5, 8), (3, 8)));
        assert!(matches!(
            lj_whittaker_params(&lj(6, 10, 5, 1, 0, 1), &mut ctx),
            Err(SchrodingerError::NonzeroEnergy(_))
        ));
    }

    #[test]
    fn zero_energy_family_examples() {
        let v = integrable_zero_energy(&lj(6, 10, 5, 1, 0, 0), DEFAULT_WITNESS_RANGE).unwrap();
        assert!(v.integrable);
        assert_eq!(v.method, Method::Both);
        assert!(v.witnesses.iter().any(|w| w.m == -1));
        let v = integrable_zero_energy(&lj(6, 10, 4, 1, 0, 0), DEFAULT_WITNESS_RANGE).unwrap();
        assert!(!v.integrable && v.witnesses.is_empty());
        let v = integrable_zero_energy(&lj(6, 10, 13, 1, 0, 0), DEFAULT_WITNESS_RANGE).unwrap();
        assert!(v.integrable && v.witnesses.iter().any(|w| w.m == 1));
        assert!(matches!(
            integrable_zero_energy(&lj(6, 12, 5, 1, 0, 0), 64),
            Err(SchrodingerError::WrongFamily { .. })
        ));
        // odd ν: Whittaker path only
        let v = integrable_zero_energy(&lj(5, 8, 7, 1, 0, 0), 64).unwrap();
        assert_eq!(v.method, Method::MartinetRamis);
    }

    #[test]
    fn oracle_agreement_sweep() {
        for a in 1..=14 {
            let v = integrable_zero_energy(&lj(6, 10, a, 1, 0, 0), 64).unwrap();
            assert_eq!(v.integrable, [3, 5, 11, 13].contains(&a), "A = {a}");
            assert_eq!(v.method, Method::Both);
        }
    }

    #[test]
    fn signed_sweep_agrees() {
        for a in -6..=6 {
            let v = integrable_zero_energy(&lj(6, 10, a, 1, 0, 0), 64).unwrap();
            assert_eq!(v.integrable, [3, 5].contains(&a.abs()), "A = {a}");
            assert_eq!(v.method, Method::Both);
        }
    }

    proptest::proptest! {
        #[test]
        fn enumeration_closed_under_negation(
            s in 1i64..8,
            d in proptest::sample::select(vec![1i64, 2, 3, 5]),
            l in 0i64..6,
            nu in 3u32..9,
            lo in -4i64..4,
            len in 0i64..4,
        ) {
            // one radical at most: √(d s²) and √(1 + 4l(l+1)) = 2l + 1
            let v = enumerate_integrable_a(&q(d * s * s, 1), &q(l * (l + 1), 1), nu, lo, lo + len).unwrap();
            for x in &v {
                proptest::prop_assert!(v.contains(&-x));
            }
            proptest::prop_assert!(v.windows(2).all(|w| w[0].cmp_real(&w[1]).is_lt()));
        }

        #[test]
        fn whittaker_even_in_mu(kn in -20i64..20, kd in 1i64..9, mn in -20i64..20, md in 1i64..9) {
            let w = wp((kn, kd), (mn, md));
            let m = wp((kn, kd), (-mn, md));
            proptest::prop_assert_eq!(whittaker_r(&w), whittaker_r(&m));
            proptest::prop_assert_eq!(martinet_ramis(&w), martinet_ramis(&m));
        }
    }

    #[test]
    fn enumerations() {
        let ints = |v: Vec<FieldElem>| v.iter().map(|x| x.as_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(enumerate_integrable_a(&q(1, 1), &q(0, 1), 6, -1, 0).unwrap()), vec![-5, -3, 3, 5]);
        assert_eq!(ints(enumerate_integrable_a(&q(1, 1), &q(0, 1), 6, 1, 1).unwrap()), vec![-13, -11, 11, 13]);
        assert_eq!(ints(enumerate_integrable_a(&q(4, 1), &q(0, 1), 6, -1, -1).unwrap()), vec![-10, -6, 6, 10]);
    }

    #[test]
    fn transform_consistency_grid() {
        for (nu, delta) in [(6, 12), (6, 10), (4, 6), (8, 14)] {
            for (a, b, c, e) in [(1, 1, 0, 0), (2, 3, 2, 1), (5, 1, 6, -1)] {
                let p = lj(nu, delta, a, b, c, e);
                let v = effective_potential(&p).even_to_square().unwrap();
                let f = &v - &RatFunc::from_int(e);
                let (aa, bb) = algebrize(&f, &RatFunc::from_poly(Poly::from_ints(&[0, 4]))).unwrap();
                let mut ctx = FieldCtx::new();
                let (r, _) = reduce_to_normal(&aa, &bb, &mut ctx).unwrap();
                // independent closed form: −3/(16z²) + f/(4z)
                let direct = &RatFunc::power(FieldElem::from_rat(q(-3, 16)), -2)
                    + &(&f.scale(&FieldElem::from_rat(q(1, 4))) / &RatFunc::x());
                assert_eq!(r, direct);
                assert_eq!(lj_normal_form(&p).unwrap(), r);
            }
        }
    }
}
