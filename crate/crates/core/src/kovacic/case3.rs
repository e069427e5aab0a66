use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exactalg::{rat, FieldCtx, FieldElem, Point, Poly, Rat, RatFunc};

use super::case2::{double_coeff, e_set, tuples};
use super::kernel::find_monic_kernel;
use super::{Analysis, CaseFailure, CaseOutcome, ClosedFormSolution, KovacicError, Omega, Origin};

/// Case 3: ω algebraic of degree m ∈ {4, 6, 12}; only its minimal
/// polynomial is returned.
pub fn case3(r: &RatFunc) -> Result<CaseOutcome, KovacicError> {
    let mut ctx = FieldCtx::new();
    let an = Analysis::new(r, &mut ctx)?;
    run(&an, &mut ctx)
}

/// `S = Π (x − c)` over the finite poles: the squarefree part of the
/// denominator.
pub(crate) fn pole_product(r: &RatFunc) -> Option<Poly> {
    let d = r.den();
    if d.degree()? == 0 {
        return Some(Poly::one());
    }
    Some(d.exact_div(&d.gcd(&d.derivative())).monic())
}

fn as_poly(f: &RatFunc) -> Option<Poly> {
    f.is_polynomial().then(|| f.num().clone())
}

/// `P_m = −P`, `P_{i−1} = −S P_i′ + ((m−i)S′ − Sθ)P_i − (m−i)(i+1)S² r P_{i+1}`.
/// Returns `P_{−1}` and `P_0 … P_m`; `None` if `Sθ` or `S²r` is not polynomial.
pub(crate) fn chain(
    r: &RatFunc,
    theta: &RatFunc,
    s: &Poly,
    m: usize,
    p: &Poly,
) -> Option<(Poly, Vec<Poly>)> {
    let st = as_poly(&theta.mul_poly(s))?;
    let s2r = as_poly(&r.mul_poly(&(s * s)))?;
    let ds = s.derivative();
    let mut ps = vec![Poly::zero(); m + 2];
    ps[m] = -p;
    let mut last = Poly::zero();
    for i in (0..=m).rev() {
        let mi = (m - i) as i64;
        let t1 = -&(s * &ps[i].derivative());
        let t2 = &(&ds.scale(&FieldElem::from_int(mi)) - &st) * &ps[i];
        let t3 = (&s2r * &ps[i + 1]).scale(&FieldElem::from_int(mi * (i as i64 + 1)));
        let next = &(&t1 + &t2) - &t3;
        if i == 0 {
            last = next;
        } else {
            ps[i - 1] = next;
        }
    }
    ps.truncate(m + 1);
    Some((last, ps))
}

/// Coefficients `Sⁱ Pᵢ / (m − i)!` of the polynomial satisfied by ω.
pub(crate) fn minimal_coeffs(s: &Poly, chain: &[Poly], m: usize) -> Vec<RatFunc> {
    let mut out = Vec::with_capacity(m + 1);
    for (i, p) in chain.iter().enumerate() {
        let fact: BigInt = (1..=(m - i) as u64).map(BigInt::from).product();
        let c = FieldElem::from_rat(Rat::new(1.into(), fact));
        out.push(RatFunc::from_poly(&s.pow(i as u32) * &p.scale(&c)));
    }
    out
}

pub(crate) fn run(an: &Analysis, _ctx: &mut FieldCtx) -> Result<CaseOutcome, KovacicError> {
    if let Some(p) = an.poles.iter().find(|p| p.order > 2) {
        return Ok(CaseOutcome::Failed(CaseFailure::Inapplicable(format!(
            "pole at {} has order {} > 2",
            p.location, p.order
        ))));
    }
    if an.inf_order < 2 {
        return Ok(CaseOutcome::Failed(CaseFailure::Inapplicable(format!(
            "order {} at infinity is below 2",
            an.inf_order
        ))));
    }
    let s = pole_product(&an.r).expect("non-zero denominator");
    let mut fin_sets = Vec::new();
    let ks_fin: Vec<Rat> = (-6..=6).map(|k| rat(k, 1)).collect();
    for p in &an.poles {
        fin_sets.push(match p.order {
            1 => vec![12],
            _ => e_set(6, &ks_fin, &double_coeff(&an.r, &Point::Finite(p.location.clone()))?),
        });
    }
    let b_inf = if an.inf_order == 2 {
        double_coeff(&an.r, &Point::Infinity)?
    } else {
        FieldElem::zero()
    };
    let mut tried = Vec::new();
    let mut any_candidate = false;
    for m in [4usize, 6, 12] {
        let ks_inf: Vec<Rat> = (-6..=6).map(|k| rat(12 * k, m as i64)).collect();
        let mut sets = fin_sets.clone();
        sets.push(e_set(6, &ks_inf, &b_inf));
        let mut candidates: Vec<(usize, Vec<i64>)> = Vec::new();
        for t in tuples(&sets) {
            let (e_inf, e_fin) = t.split_last().unwrap();
            let n = rat(m as i64, 12) * Rat::from_integer((e_inf - e_fin.iter().sum::<i64>()).into());
            if n.is_integer() && !(n < Rat::zero()) {
                if let Some(n) = n.to_integer().to_usize() {
                    candidates.push((n, t));
                }
            }
        }
        candidates.sort_by_key(|c| c.0);
        any_candidate |= !candidates.is_empty();
        for (n, t) in candidates {
            let mut theta = RatFunc::zero();
            for (p, &e) in an.poles.iter().zip(&t) {
                let coef = FieldElem::from_rat(rat(m as i64 * e, 12));
                theta = &theta + &RatFunc::power_at(coef, &p.location, -1);
            }
            let op = |p: &Poly| {
                RatFunc::from_poly(chain(&an.r, &theta, &s, m, p).expect("polynomial chain").0)
            };
            if let Some(p) = find_monic_kernel(n, op) {
                let (_, ps) = chain(&an.r, &theta, &s, m, &p).expect("polynomial chain");
                let coeffs = minimal_coeffs(&s, &ps, m);
                let mut points: Vec<Point> =
                    an.poles.iter().map(|p| Point::Finite(p.location.clone())).collect();
                points.push(Point::Infinity);
                let origin = Origin::ETuple(
                    points.into_iter().zip(t.iter().map(|&e| FieldElem::from_int(e))).collect(),
                );
                return Ok(CaseOutcome::Found(ClosedFormSolution {
                    case: 3,
                    n,
                    omega: Omega::Minimal { coeffs },
                    prefactor: p,
                    theta: Some(theta),
                    m: Some(m),
                    p_chain: ps,
                    origin,
                    zeta: None,
                }));
            }
            if !tried.contains(&n) {
                tried.push(n);
            }
        }
    }
    if !any_candidate {
        return Ok(CaseOutcome::Failed(CaseFailure::EmptyD));
    }
    Ok(CaseOutcome::Failed(CaseFailure::NoPolynomial { tried }))
}
