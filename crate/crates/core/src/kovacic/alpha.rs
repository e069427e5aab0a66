//! Step 1 of case 1: the exponents `α±` and square-root heads at every
//! point of Γ.

use crate::exactalg::{
    laurent_head, rat, sqrt_laurent, FieldCtx, FieldElem, Point, RatFunc,
};

use super::{Analysis, KovacicError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Situation {
    /// simple pole
    C1,
    /// double pole
    C2,
    /// pole of even order ≥ 4
    C3,
    /// order at infinity > 2
    Inf1,
    /// order at infinity 2
    Inf2,
    /// even order at infinity ≤ 0
    Inf3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaRecord {
    pub point: Point,
    /// Pole order, or the order at infinity.
    pub order: i64,
    pub situation: Situation,
    /// `[√r]` at the point (zero in the simple situations).
    pub sqrt_part: RatFunc,
    pub alpha_plus: FieldElem,
    pub alpha_minus: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaData {
    /// Finite poles in pole order, then infinity. Empty when inapplicable.
    pub records: Vec<AlphaRecord>,
    pub inapplicable: Option<String>,
}

/// Exponent data for `r`; marks case 1 inapplicable when a pole has odd
/// order above 1 or the order at infinity is odd and at most 2.
pub fn alpha_data(r: &RatFunc) -> Result<AlphaData, KovacicError> {
    let mut ctx = FieldCtx::new();
    let an = Analysis::new(r, &mut ctx)?;
    compute(&an, &mut ctx)
}

pub(crate) fn inapplicable(an: &Analysis) -> Option<String> {
    if let Some(p) = an.poles.iter().find(|p| p.order > 1 && p.order % 2 == 1) {
        return Some(format!("pole at {} has odd order {}", p.location, p.order));
    }
    if an.inf_order <= 2 && an.inf_order % 2 != 0 {
        return Some(format!("odd order {} at infinity", an.inf_order));
    }
    None
}

fn from_sqrt_disc(b: &FieldElem, ctx: &mut FieldCtx) -> Result<(FieldElem, FieldElem), KovacicError> {
    let s = ctx.sqrt(&(&FieldElem::one() + &(b * &FieldElem::from_int(4))))?;
    let half = FieldElem::from_rat(rat(1, 2));
    Ok((
        &(&FieldElem::one() + &s) * &half,
        &(&FieldElem::one() - &s) * &half,
    ))
}

pub(crate) fn compute(an: &Analysis, ctx: &mut FieldCtx) -> Result<AlphaData, KovacicError> {
    if let Some(why) = inapplicable(an) {
        return Ok(AlphaData {
            records: Vec::new(),
            inapplicable: Some(why),
        });
    }
    let half = FieldElem::from_rat(rat(1, 2));
    let mut records = Vec::new();
    for p in &an.poles {
        let pt = Point::Finite(p.location.clone());
        let rec = match p.order {
            1 => AlphaRecord {
                point: pt,
                order: 1,
                situation: Situation::C1,
                sqrt_part: RatFunc::zero(),
                alpha_plus: FieldElem::one(),
                alpha_minus: FieldElem::one(),
            },
            2 => {
                let b = laurent_head(&an.r, &pt, 1)?.coeffs[0].clone();
                let (ap, am) = from_sqrt_disc(&b, ctx)?;
                AlphaRecord {
                    point: pt,
                    order: 2,
                    situation: Situation::C2,
                    sqrt_part: RatFunc::zero(),
                    alpha_plus: ap,
                    alpha_minus: am,
                }
            }
            k => {
                let s = sqrt_laurent(&an.r, &pt, ctx)?;
                let ba = &s.b / &s.a;
                let v = FieldElem::from_int(s.v);
                AlphaRecord {
                    point: pt,
                    order: k as i64,
                    situation: Situation::C3,
                    sqrt_part: s.head.to_ratfunc(),
                    alpha_plus: &(&ba + &v) * &half,
                    alpha_minus: &(&(-&ba) + &v) * &half,
                }
            }
        };
        records.push(rec);
    }
    let o = an.inf_order;
    let rec = if o > 2 {
        AlphaRecord {
            point: Point::Infinity,
            order: o,
            situation: Situation::Inf1,
            sqrt_part: RatFunc::zero(),
            alpha_plus: FieldElem::zero(),
            alpha_minus: FieldElem::one(),
        }
    } else if o == 2 {
        let b = laurent_head(&an.r, &Point::Infinity, 1)?.coeffs[0].clone();
        let (ap, am) = from_sqrt_disc(&b, ctx)?;
        AlphaRecord {
            point: Point::Infinity,
            order: 2,
            situation: Situation::Inf2,
            sqrt_part: RatFunc::zero(),
            alpha_plus: ap,
            alpha_minus: am,
        }
    } else {
        let s = sqrt_laurent(&an.r, &Point::Infinity, ctx)?;
        let ba = &s.b / &s.a;
        let v = FieldElem::from_int(s.v);
        AlphaRecord {
            point: Point::Infinity,
            order: o,
            situation: Situation::Inf3,
            sqrt_part: s.head.to_ratfunc(),
            alpha_plus: &(&ba - &v) * &half,
            alpha_minus: &(&(-&ba) - &v) * &half,
        }
    };
    records.push(rec);
    Ok(AlphaData {
        records,
        inapplicable: None,
    })
}
