//! Truncated Laurent expansions of rational functions and of their square
//! roots, at a finite point or at infinity.

use super::field::{FieldCtx, FieldElem};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::AlgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(FieldElem),
    Infinity,
}

impl Point {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

/// `Σ coeffs[i]·(x−c)^(leading_order+i)` at a finite `c`, or
/// `Σ coeffs[i]·x^(−leading_order−i)` at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentHead {
    pub point: Point,
    pub leading_order: i64,
    pub coeffs: Vec<FieldElem>,
}

impl LaurentHead {
    /// Converts the truncated sum back into a rational function of `x`.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.leading_order + i as i64;
            let term = match &self.point {
                Point::Finite(at) => RatFunc::power_at(c.clone(), at, k),
                Point::Infinity => RatFunc::power(c.clone(), -k),
            };
            acc = &acc + &term;
        }
        acc
    }
}

/// Square-root head of `r` at a pole of even order together with the data
/// `r = ([√r])² + b·(x−c)^{−(v+1)} + …` (resp. `b·x^{v−1}` at infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtHead {
    pub head: LaurentHead,
    pub a: FieldElem,
    pub b: FieldElem,
    pub v: i64,
}

/// First `count` power-series coefficients of `num/den`, `den(0) ≠ 0`.
fn series_div(num: &Poly, den: &Poly, count: usize) -> Vec<FieldElem> {
    let d0inv = den.coeff(0).inv();
    let mut out: Vec<FieldElem> = Vec::with_capacity(count);
    for k in 0..count {
        let mut s = num.coeff(k);
        for j in 1..=k.min(den.degree().unwrap_or(0)) {
            s = &s - &(&den.coeff(j) * &out[k - j]);
        }
        out.push(&s * &d0inv);
    }
    out
}

/// Leading `count` coefficients of the Laurent expansion of `r` at `point`.
pub fn laurent_head(r: &RatFunc, point: &Point, count: usize) -> Result<LaurentHead, AlgError> {
    if r.is_zero() {
        return Err(AlgError::ZeroFunction);
    }
    let (num, den, leading_order) = match point {
        Point::Finite(c) => {
            let n = r.num().shift(c);
            let d = r.den().shift(c);
            let vn = n.valuation().unwrap();
            let vd = d.valuation().unwrap();
            (n.div_x_pow(vn), d.div_x_pow(vd), vn as i64 - vd as i64)
        }
        Point::Infinity => {
            // r(1/t) = t^{deg d − deg n} · rev(n)(t) / rev(d)(t)
            (r.num().reversed(), r.den().reversed(), r.order_at_infinity()?)
        }
    };
    Ok(LaurentHead {
        point: point.clone(),
        leading_order,
        coeffs: series_div(&num, &den, count),
    })
}

/// `[√r]` at a finite pole of order `2v ≥ 4` or at infinity when
/// `order_at_infinity = −2v ≤ 0`.
pub fn sqrt_laurent(r: &RatFunc, point: &Point, ctx: &mut FieldCtx) -> Result<SqrtHead, AlgError> {
    let probe = laurent_head(r, point, 1)?;
    let order = -probe.leading_order;
    // Both cases have the form Σ s_k u^{−2v+k} in the local parameter u.
    let v = match point {
        Point::Finite(_) => {
            if order % 2 != 0 {
                return Err(AlgError::OddOrder { order });
            }
            if order < 4 {
                return Err(AlgError::UnexpectedOrder { order, expected: "even pole order ≥ 4" });
            }
            order / 2
        }
        Point::Infinity => {
            if order % 2 != 0 {
                return Err(AlgError::OddOrder { order: -order });
            }
            if order < 0 {
                return Err(AlgError::UnexpectedOrder {
                    order: -order,
                    expected: "order at infinity ≤ 0",
                });
            }
            order / 2
        }
    };
    // finite: head u^{−v} … u^{−2}, i.e. v−1 terms; infinity: x^v … x^0, v+1 terms
    let nh = match point {
        Point::Finite(_) => (v - 1) as usize,
        Point::Infinity => (v + 1) as usize,
    };
    let s = laurent_head(r, point, nh + 1)?.coeffs;
    let a = ctx.sqrt(&s[0]).map_err(|_| AlgError::UnsupportedExtension {
        detail: format!("square root of leading coefficient {} leaves the field", s[0]),
    })?;
    let two_a_inv = (&a * &FieldElem::from_int(2)).inv();
    let cross = |h: &[FieldElem], k: usize| -> FieldElem {
        let mut acc = FieldElem::zero();
        for j in 0..=k {
            let l = k - j;
            if j < h.len() && l < h.len() && j != 0 && l != 0 {
                acc = &acc + &(&h[j] * &h[l]);
            }
        }
        acc
    };
    let mut h = vec![a.clone()];
    for k in 1..nh {
        let hk = &(&s[k] - &cross(&h, k)) * &two_a_inv;
        h.push(hk);
    }
    // b: the coefficient of u^{−2v+nh} in r − h², with every h term present.
    let mut hh = FieldElem::zero();
    for j in 0..nh {
        let l = nh - j;
        if l < nh {
            hh = &hh + &(&h[j] * &h[l]);
        }
    }
    let b = &s[nh] - &hh;
    let leading_order = match point {
        Point::Finite(_) => -v,
        Point::Infinity => -v,
    };
    Ok(SqrtHead {
        head: LaurentHead {
            point: point.clone(),
            leading_order,
            coeffs: h,
        },
        a,
        b,
        v,
    })
}
