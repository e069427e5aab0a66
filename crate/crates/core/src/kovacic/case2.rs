use num_traits::ToPrimitive;

use crate::exactalg::{
    laurent_head, rat, rat::rat_sqrt_exact, FieldCtx, FieldElem, Point, Poly, Rat, RatFunc,
};

use super::kernel::find_monic_kernel;
use super::{
    case2_quadratic, case2_residual, zeta_of, Analysis, CaseFailure, CaseOutcome,
    ClosedFormSolution, KovacicError, Omega, Origin,
};

/// Case 2: ω is a root of a quadratic over ℚ(√d)(x).
pub fn case2(r: &RatFunc) -> Result<CaseOutcome, KovacicError> {
    let mut ctx = FieldCtx::new();
    let an = Analysis::new(r, &mut ctx)?;
    run(&an, &mut ctx)
}

/// Integer members of `{base + k·√(1+4b)}` over the given multipliers `k`.
/// An irrational root only contributes through `k = 0`.
pub(crate) fn e_set(base: i64, ks: &[Rat], b: &FieldElem) -> Vec<i64> {
    let disc = &FieldElem::one() + &(b * &FieldElem::from_int(4));
    let root = disc.as_rat().and_then(rat_sqrt_exact);
    let mut out = Vec::new();
    for k in ks {
        let e = match &root {
            Some(s) => Rat::from_integer(base.into()) + k * s,
            None if k == &Rat::from_integer(0.into()) => Rat::from_integer(base.into()),
            None => continue,
        };
        if e.is_integer() {
            if let Some(v) = e.to_integer().to_i64() {
                out.push(v);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Leading Laurent coefficient of `r` at a double pole or at infinity of order 2.
pub(crate) fn double_coeff(r: &RatFunc, pt: &Point) -> Result<FieldElem, KovacicError> {
    Ok(laurent_head(r, pt, 1)?.coeffs[0].clone())
}

/// All tuples of the product of `sets`, first set most significant.
pub(crate) fn tuples(sets: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for s in sets {
        let mut next = Vec::with_capacity(out.len() * s.len());
        for t in &out {
            for &e in s {
                let mut t2 = t.clone();
                t2.push(e);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn ks(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&k| rat(k, 1)).collect()
}

/// Exact square root of a rational function, if it is a square.
pub(crate) fn ratfunc_sqrt(f: &RatFunc, ctx: &mut FieldCtx) -> Option<RatFunc> {
    if f.is_zero() {
        return Some(RatFunc::zero());
    }
    let mut trial = ctx.clone();
    let n = poly_sqrt(f.num(), &mut trial)?;
    let d = poly_sqrt(f.den(), &mut trial)?;
    *ctx = trial;
    RatFunc::new(n, d).ok()
}

fn poly_sqrt(p: &Poly, ctx: &mut FieldCtx) -> Option<Poly> {
    let deg = p.degree()?;
    if deg % 2 == 1 {
        return None;
    }
    let k = deg / 2;
    let lead = ctx.sqrt(&p.lead()).ok()?;
    let inv2 = (&lead * &FieldElem::from_int(2)).inv();
    let mut s = vec![FieldElem::zero(); k + 1];
    s[k] = lead;
    for j in (0..k).rev() {
        let mut acc = p.coeff(k + j);
        for a in (j + 1)..=k {
            let b = k + j - a;
            if b > j && b <= k {
                acc = &acc - &(&s[a] * &s[b]);
            }
        }
        s[j] = &acc * &inv2;
    }
    let q = Poly::new(s);
    (&q * &q == *p).then_some(q)
}

pub(crate) fn run(an: &Analysis, ctx: &mut FieldCtx) -> Result<CaseOutcome, KovacicError> {
    let mut sets = Vec::new();
    for p in &an.poles {
        let pt = Point::Finite(p.location.clone());
        sets.push(match p.order {
            1 => vec![4],
            2 => e_set(2, &ks(&[0, 2, -2]), &double_coeff(&an.r, &pt)?),
            v => vec![v as i64],
        });
    }
    let o = an.inf_order;
    sets.push(if o > 2 {
        vec![0, 2, 4]
    } else if o == 2 {
        e_set(2, &ks(&[0, 2, -2]), &double_coeff(&an.r, &Point::Infinity)?)
    } else {
        vec![o]
    });
    let mut candidates: Vec<(usize, Vec<i64>)> = Vec::new();
    for t in tuples(&sets) {
        let (e_inf, e_fin) = t.split_last().unwrap();
        let diff = e_inf - e_fin.iter().sum::<i64>();
        if diff >= 0 && diff % 2 == 0 {
            candidates.push(((diff / 2) as usize, t));
        }
    }
    if candidates.is_empty() {
        return Ok(CaseOutcome::Failed(CaseFailure::EmptyD));
    }
    candidates.sort_by_key(|c| c.0);
    let half = FieldElem::from_rat(rat(1, 2));
    let mut tried = Vec::new();
    for (n, t) in candidates {
        let mut theta = RatFunc::zero();
        for (p, &e) in an.poles.iter().zip(&t) {
            theta = &theta + &RatFunc::power_at(&half * &FieldElem::from_int(e), &p.location, -1);
        }
        let Some(p) = find_monic_kernel(n, |p| case2_residual(&an.r, &theta, p)) else {
            if !tried.contains(&n) {
                tried.push(n);
            }
            continue;
        };
        let (phi, c) = case2_quadratic(&an.r, &theta, &p);
        let disc = &(&phi * &phi) - &c.scale(&FieldElem::from_int(4));
        let (omega, zeta) = match ratfunc_sqrt(&disc, ctx) {
            Some(s) => {
                let plus = (&s - &phi).scale(&half);
                let w = if &plus.derivative() + &(&plus * &plus) == an.r {
                    plus
                } else {
                    (&(-&s) - &phi).scale(&half)
                };
                let z = zeta_of(&Poly::one(), &w, ctx)?;
                (Omega::Rational(w), Some(z))
            }
            None => (Omega::Quadratic { b: phi, c }, None),
        };
        let mut points: Vec<Point> = an.poles.iter().map(|p| Point::Finite(p.location.clone())).collect();
        points.push(Point::Infinity);
        let origin = Origin::ETuple(points.into_iter().zip(t.iter().map(|&e| FieldElem::from_int(e))).collect());
        return Ok(CaseOutcome::Found(ClosedFormSolution {
            case: 2,
            n,
            omega,
            prefactor: p,
            theta: Some(theta),
            m: None,
            p_chain: Vec::new(),
            origin,
            zeta,
        }));
    }
    Ok(CaseOutcome::Failed(CaseFailure::NoPolynomial { tried }))
}
