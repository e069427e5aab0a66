//! Exact roots of polynomials that split over the working field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{FieldCtx, FieldElem};
use super::poly::Poly;
use super::rat::{divisors, Rat};
use super::ratfunc::RatFunc;
use super::AlgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleData {
    pub location: FieldElem,
    pub order: usize,
}

/// Finite poles of `r` with multiplicities, ordered by
/// (rational part, radical part).
pub fn poles(r: &RatFunc, ctx: &mut FieldCtx) -> Result<Vec<PoleData>, AlgError> {
    Ok(roots_with_multiplicity(r.den(), ctx)?
        .into_iter()
        .map(|(location, order)| PoleData { location, order })
        .collect())
}

/// All roots of `p` with multiplicities. Fails with `UnsupportedPoles` when
/// `p` does not split into linear factors over ℚ(√d).
pub fn roots_with_multiplicity(
    p: &Poly,
    ctx: &mut FieldCtx,
) -> Result<Vec<(FieldElem, usize)>, AlgError> {
    for c in p.coeffs() {
        ctx.absorb(c)?;
    }
    let mut out = Vec::new();
    for (f, mult) in p.squarefree_factors() {
        for root in squarefree_roots(&f, ctx)? {
            out.push((root, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp_lex(&b.0));
    Ok(out)
}

fn squarefree_roots(f: &Poly, ctx: &mut FieldCtx) -> Result<Vec<FieldElem>, AlgError> {
    let mut roots = Vec::new();
    let mut rest = f.monic();
    if rest.coeff(0).is_zero() {
        roots.push(FieldElem::zero());
        rest = rest.div_x_pow(1);
    }
    if rest.degree().unwrap_or(0) > 2 {
        // The norm polynomial is rational and shares every root of `rest`.
        let norm = if rest.is_rational() {
            rest.clone()
        } else {
            &rest * &rest.conj()
        };
        for q in rational_roots(&norm)? {
            let q = FieldElem::from_rat(q);
            if rest.eval(&q).is_zero() {
                rest = rest.exact_div(&Poly::linear_root(&q));
                roots.push(q);
            }
        }
    }
    match rest.degree().unwrap_or(0) {
        0 => {}
        1 => roots.push(-&rest.coeff(0)),
        2 => {
            let (c, b) = (rest.coeff(0), rest.coeff(1));
            let disc = &(&b * &b) - &(&c * &FieldElem::from_int(4));
            let s = ctx.sqrt(&disc).map_err(|e| AlgError::UnsupportedPoles {
                detail: format!("quadratic factor {} does not split: {e}", rest.render("x")),
            })?;
            let half = FieldElem::from_rat(Rat::new(BigInt::one(), BigInt::from(2)));
            roots.push(&(&(-&b) - &s) * &half);
            roots.push(&(&(-&b) + &s) * &half);
        }
        d => {
            return Err(AlgError::UnsupportedPoles {
                detail: format!(
                    "irreducible factor of degree {d} in {}",
                    rest.render("x")
                ),
            })
        }
    }
    Ok(roots)
}

/// Rational roots of a rational polynomial by the rational root theorem.
fn rational_roots(p: &Poly) -> Result<Vec<Rat>, AlgError> {
    let too_big = || AlgError::UnsupportedPoles {
        detail: format!("coefficients of {} too large to factor", p.render("x")),
    };
    let mut p = p.clone();
    let mut out = Vec::new();
    if let Some(k) = p.valuation() {
        if k > 0 {
            out.push(Rat::zero());
            p = p.div_x_pow(k);
        }
    }
    if p.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let ints = p.primitive_integer_coeffs().ok_or_else(too_big)?;
    let num_divs = divisors(&ints[0]).ok_or_else(too_big)?;
    let den_divs = divisors(ints.last().unwrap()).ok_or_else(too_big)?;
    let mut seen = Vec::new();
    for q in &den_divs {
        for n in &num_divs {
            for cand in [Rat::new(n.clone(), q.clone()), Rat::new(-n.clone(), q.clone())] {
                if seen.contains(&cand) {
                    continue;
                }
                seen.push(cand.clone());
                if p.eval(&FieldElem::from_rat(cand.clone())).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    Ok(out)
}
