use num_traits::ToPrimitive;

use crate::exactalg::{FieldCtx, FieldElem, Point, RatFunc};

use super::alpha::{self, AlphaRecord};
use super::kernel::find_monic_kernel;
use super::{
    case1_residual, zeta_of, Analysis, CaseFailure, CaseOutcome, ClosedFormSolution,
    KovacicError, Omega, Origin, Sign,
};

/// Case 1: ζ = P·exp(∫ω) with ω rational.
pub fn case1(r: &RatFunc) -> Result<CaseOutcome, KovacicError> {
    let mut ctx = FieldCtx::new();
    let an = Analysis::new(r, &mut ctx)?;
    run(&an, &mut ctx)
}

fn alpha_for(rec: &AlphaRecord, s: Sign) -> &FieldElem {
    match s {
        Sign::Plus => &rec.alpha_plus,
        Sign::Minus => &rec.alpha_minus,
    }
}

fn omega_for(records: &[AlphaRecord], signs: &[Sign]) -> RatFunc {
    let mut w = RatFunc::zero();
    for (rec, &s) in records.iter().zip(signs) {
        let head = match s {
            Sign::Plus => rec.sqrt_part.clone(),
            Sign::Minus => -&rec.sqrt_part,
        };
        w = &w + &head;
        if let Point::Finite(c) = &rec.point {
            w = &w + &RatFunc::power_at(alpha_for(rec, s).clone(), c, -1);
        }
    }
    w
}

pub(crate) fn run(an: &Analysis, ctx: &mut FieldCtx) -> Result<CaseOutcome, KovacicError> {
    let data = alpha::compute(an, ctx)?;
    if let Some(why) = data.inapplicable {
        return Ok(CaseOutcome::Failed(CaseFailure::Inapplicable(why)));
    }
    let recs = &data.records;
    let k = recs.len();
    let mut candidates: Vec<(usize, Vec<Sign>)> = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let signs: Vec<Sign> = (0..k)
            .map(|i| if mask >> (k - 1 - i) & 1 == 1 { Sign::Minus } else { Sign::Plus })
            .collect();
        // a minus sign that changes nothing repeats an earlier assignment
        let redundant = recs.iter().zip(&signs).any(|(rec, &s)| {
            s == Sign::Minus && rec.alpha_plus == rec.alpha_minus && rec.sqrt_part.is_zero()
        });
        if redundant {
            continue;
        }
        let (inf, fin) = recs.split_last().unwrap();
        let mut n = alpha_for(inf, signs[k - 1]).clone();
        for (rec, &s) in fin.iter().zip(&signs) {
            n = &n - alpha_for(rec, s);
        }
        if let Some(n) = n.as_integer().and_then(|n| n.to_usize()) {
            candidates.push((n, signs));
        }
    }
    if candidates.is_empty() {
        return Ok(CaseOutcome::Failed(CaseFailure::EmptyD));
    }
    candidates.sort_by_key(|c| c.0);
    let mut tried = Vec::new();
    for (n, signs) in candidates {
        let omega = omega_for(recs, &signs);
        if let Some(p) = find_monic_kernel(n, |p| case1_residual(&an.r, &omega, p)) {
            let zeta = zeta_of(&p, &omega, ctx)?;
            let origin = Origin::Signs(recs.iter().map(|r| r.point.clone()).zip(signs).collect());
            return Ok(CaseOutcome::Found(ClosedFormSolution {
                case: 1,
                n,
                omega: Omega::Rational(omega),
                prefactor: p,
                theta: None,
                m: None,
                p_chain: Vec::new(),
                origin,
                zeta: Some(zeta),
            }));
        }
        if !tried.contains(&n) {
            tried.push(n);
        }
    }
    Ok(CaseOutcome::Failed(CaseFailure::NoPolynomial { tried }))
}
