//! Closed forms `Π pᵢ(x)^{eᵢ} · exp(g(x))` with exact exponents, the shape
//! every Liouvillian solution found here takes once `∫ω` is carried out.

use std::fmt;

use super::field::{FieldCtx, FieldElem};
use super::laurent::{laurent_head, Point};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::roots::roots_with_multiplicity;
use super::AlgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpForm {
    /// Monic, non-constant bases with non-zero exponents, sorted.
    factors: Vec<(Poly, FieldElem)>,
    exp_arg: RatFunc,
}

impl ExpForm {
    pub fn one() -> Self {
        ExpForm {
            factors: Vec::new(),
            exp_arg: RatFunc::zero(),
        }
    }

    pub fn new(factors: Vec<(Poly, FieldElem)>, exp_arg: RatFunc) -> Self {
        let mut e = ExpForm { factors, exp_arg };
        e.canonicalize();
        e
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::new(vec![(p.clone(), FieldElem::one())], RatFunc::zero())
    }

    pub fn exp(g: RatFunc) -> Self {
        Self::new(Vec::new(), g)
    }

    pub fn factors(&self) -> &[(Poly, FieldElem)] {
        &self.factors
    }

    pub fn exp_arg(&self) -> &RatFunc {
        &self.exp_arg
    }

    fn canonicalize(&mut self) {
        let mut merged: Vec<(Poly, FieldElem)> = Vec::new();
        for (p, e) in self.factors.drain(..) {
            if p.degree().unwrap_or(0) == 0 || e.is_zero() {
                continue;
            }
            let (base, e) = if p.is_monomial() {
                let k = p.degree().unwrap() as i64;
                (Poly::x(), &e * &FieldElem::from_int(k))
            } else {
                (p.monic(), e)
            };
            match merged.iter_mut().find(|(b, _)| *b == base) {
                Some(slot) => slot.1 = &slot.1 + &e,
                None => merged.push((base, e)),
            }
        }
        merged.retain(|(_, e)| !e.is_zero());
        merged.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.render("x").cmp(&b.0.render("x")))
        });
        self.factors = merged;
    }

    pub fn mul(&self, other: &ExpForm) -> ExpForm {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        ExpForm::new(f, &self.exp_arg + &other.exp_arg)
    }

    /// Raises to an exact power `k` (branch chosen factorwise).
    pub fn pow(&self, k: &FieldElem) -> ExpForm {
        let f = self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect();
        ExpForm::new(f, self.exp_arg.scale(k))
    }

    /// Substitutes `x ↦ x²`.
    pub fn compose_square(&self) -> ExpForm {
        let f = self
            .factors
            .iter()
            .map(|(p, e)| (p.compose_square(), e.clone()))
            .collect();
        ExpForm::new(f, self.exp_arg.compose_square())
    }

    /// Logarithmic derivative `(d/dx) log` of the form.
    pub fn log_derivative(&self) -> RatFunc {
        let mut acc = self.exp_arg.derivative();
        for (p, e) in &self.factors {
            let t = RatFunc::new(p.derivative(), p.clone())
                .expect("non-zero base")
                .scale(e);
            acc = &acc + &t;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut v = self.exp_arg.eval_f64(x).exp();
        for (p, e) in &self.factors {
            v *= p.eval_f64(x).powf(e.to_f64());
        }
        v
    }

    pub fn render(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (p, e) in &self.factors {
            let base = if *p == Poly::x() {
                var.to_string()
            } else {
                format!("({})", p.render(var))
            };
            let pw = match e.as_i64() {
                Some(1) => base,
                Some(k) if k > 1 => format!("{base}^{k}"),
                _ => format!("{base}^({})", e.render(false)),
            };
            parts.push(pw);
        }
        if !self.exp_arg.is_zero() {
            parts.push(format!("exp({})", self.exp_arg.render(var)));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for ExpForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// `exp(∫ω)` in closed form via partial fractions. Needs every pole of `ω`
/// to lie in the working field.
pub fn exp_integral(omega: &RatFunc, ctx: &mut FieldCtx) -> Result<ExpForm, AlgError> {
    if omega.is_zero() {
        return Ok(ExpForm::one());
    }
    let (q, _) = omega.num().div_rem(omega.den());
    let mut arg = RatFunc::from_poly(q.integral());
    let mut factors = Vec::new();
    for (c, k) in roots_with_multiplicity(omega.den(), ctx)? {
        let head = laurent_head(omega, &Point::Finite(c.clone()), k)?;
        for (i, a) in head.coeffs.iter().enumerate() {
            let j = head.leading_order + i as i64;
            if j >= 0 || a.is_zero() {
                continue;
            }
            if j == -1 {
                factors.push((Poly::linear_root(&c), a.clone()));
            } else {
                let t = RatFunc::power_at(a * &FieldElem::from_int(j + 1).inv(), &c, j + 1);
                arg = &arg + &t;
            }
        }
    }
    Ok(ExpForm::new(factors, arg))
}

/// `ζ₁ · ∫ ζ₁⁻² dx`, kept unevaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrature {
    pub zeta1: ExpForm,
    pub integrand: ExpForm,
}

impl Quadrature {
    pub fn of(zeta1: &ExpForm) -> Self {
        Quadrature {
            zeta1: zeta1.clone(),
            integrand: zeta1.pow(&FieldElem::from_int(-2)),
        }
    }

    pub fn render(&self, var: &str) -> String {
        let z = self.zeta1.render(var);
        let i = self.integrand.render(var);
        if z == "1" {
            format!("integrate({i}, {var})")
        } else {
            format!("{z}*integrate({i}, {var})")
        }
    }
}
