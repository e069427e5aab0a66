//! Reduced rational functions `num/den` over ℚ(√d).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::FieldElem;
use super::poly::Poly;
use super::rat::Rat;
use super::AlgError;

/// Always reduced: `gcd(num, den) = 1`, `den` monic and non-zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Reduces `num/den` to the unique form with coprime parts and monic denominator.
pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc, AlgError> {
    RatFunc::new(num, den)
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let l = d.lead();
        if !l.is_one() {
            let li = l.inv();
            n = n.scale(&li);
            d = d.scale(&li);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(FieldElem::from_int(n))
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::constant(FieldElem::from_rat(q))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c·x^k` for any integer `k`.
    pub fn power(c: FieldElem, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            Self::reduce(Poly::constant(c), Poly::monomial(FieldElem::one(), (-k) as usize))
        }
    }

    /// `c·(x − at)^k` for any integer `k`.
    pub fn power_at(c: FieldElem, at: &FieldElem, k: i64) -> Self {
        let lin = Poly::linear_root(at);
        if k >= 0 {
            Self::from_poly(lin.pow(k as u32).scale(&c))
        } else {
            Self::reduce(Poly::constant(c), lin.pow((-k) as u32))
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<FieldElem> {
        (self.den.is_one() && self.num.degree().unwrap_or(0) == 0).then(|| self.num.coeff(0))
    }

    /// `deg(den) − deg(num)`; undefined for the zero function.
    pub fn order_at_infinity(&self) -> Result<i64, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroFunction);
        }
        Ok(self.den.deg_i64() - self.num.deg_i64())
    }

    pub fn radicand(&self) -> u64 {
        self.num.radicand().max(self.den.radicand())
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        Self::reduce(n, d)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Result<Self, AlgError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Value at a point that is not a pole.
    pub fn eval(&self, x: &FieldElem) -> Option<FieldElem> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| &self.num.eval(x) / &d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// `f(c·x)`.
    pub fn scale_arg(&self, c: &FieldElem) -> Self {
        Self::reduce(self.num.scale_arg(c), self.den.scale_arg(c))
    }

    /// `f(x²)`.
    pub fn compose_square(&self) -> Self {
        Self::reduce(self.num.compose_square(), self.den.compose_square())
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &FieldElem) -> Self {
        Self::reduce(self.num.shift(c), self.den.shift(c))
    }

    /// Inverse of [`compose_square`](Self::compose_square): rewrites an even
    /// function of `x` as a function of `x²`. `None` if odd powers occur.
    pub fn even_to_square(&self) -> Option<Self> {
        let halve = |p: &Poly| -> Option<Poly> {
            let mut v = Vec::new();
            for (i, c) in p.coeffs().iter().enumerate() {
                if i % 2 == 1 {
                    if !c.is_zero() {
                        return None;
                    }
                } else {
                    v.push(c.clone());
                }
            }
            Some(Poly::new(v))
        };
        Some(Self::reduce(halve(&self.num)?, halve(&self.den)?))
    }

    /// Lowest-terms integer rendering, e.g. `(-3*x^4-20*x^2+4)/(16*x^6)`.
    pub fn render(&self, var: &str) -> String {
        if self.num.is_zero() {
            return "0".into();
        }
        if self.den.is_one() {
            return self.num.render(var);
        }
        let (n, d) = integer_scaled(&self.num, &self.den);
        let ns = n.render(var);
        if d.is_one() {
            return ns;
        }
        let ns = if n.num_terms() > 1 { format!("({ns})") } else { ns };
        let ds = if d.num_terms() == 1 && d.lead().is_one() && d.degree() == Some(1) {
            var.to_string()
        } else if d.num_terms() == 1 && d.lead().is_one() {
            d.render(var)
        } else {
            format!("({})", d.render(var))
        };
        format!("{ns}/{ds}")
    }
}

/// Scales numerator and denominator by a common rational so both have
/// integer coefficients with trivial joint content and the denominator's
/// leading coefficient is positive.
fn integer_scaled(num: &Poly, den: &Poly) -> (Poly, Poly) {
    let all = num.coeffs().iter().chain(den.coeffs().iter());
    let l = all.clone().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.rational_part().denom())
            .lcm(c.radical_part().denom())
    });
    let g = all.fold(BigInt::zero(), |acc, c| {
        let a = (c.rational_part() * Rat::from_integer(l.clone())).to_integer();
        let b = (c.radical_part() * Rat::from_integer(l.clone())).to_integer();
        acc.gcd(&a).gcd(&b)
    });
    let mut s = Rat::new(l, if g.is_zero() { BigInt::one() } else { g });
    if den.lead().signum() < 0 {
        s = -s;
    }
    let f = FieldElem::from_rat(s);
    (num.scale(&f), den.scale(&f))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::reduce(n, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        assert!(!o.is_zero(), "rational function division by zero");
        RatFunc::reduce(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_rf {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc { (&self).$m(o) }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { self.$m(&o) }
        }
    )*};
}
forward_owned_rf!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn cancels_common_factor() {
        let r = normalize(p(&[-2, 0, 2]), p(&[-2, 2])).unwrap();
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &Poly::one());
    }

    #[test]
    fn already_reduced() {
        let r = normalize(Poly::one(), p(&[0, 0, 1])).unwrap();
        assert_eq!(r.num(), &Poly::one());
        assert_eq!(r.den(), &p(&[0, 0, 1]));
    }

    #[test]
    fn monic_denominator_for_twelve_six_instance() {
        // (−4x⁶+5x⁵−4x³+4)/(16x⁷)
        let r = normalize(p(&[4, 0, 0, -4, 0, 5, -4]), Poly::monomial(16.into(), 7)).unwrap();
        let expect = Poly::from_rats(&[
            rat(1, 4),
            rat(0, 1),
            rat(0, 1),
            rat(-1, 4),
            rat(0, 1),
            rat(5, 16),
            rat(-1, 4),
        ]);
        assert_eq!(r.num(), &expect);
        assert_eq!(r.den(), &Poly::monomial(FieldElem::one(), 7));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(normalize(Poly::one(), Poly::zero()), Err(AlgError::ZeroDenominator));
    }

    #[test]
    fn infinity_orders() {
        assert_eq!(RatFunc::from_poly(p(&[1, 0, 1])).order_at_infinity(), Ok(-2));
        assert_eq!(RatFunc::power(FieldElem::one(), -4).order_at_infinity(), Ok(4));
        assert_eq!(RatFunc::zero().order_at_infinity(), Err(AlgError::ZeroFunction));
    }

    #[test]
    fn derivative_of_quotient() {
        // d/dx 1/x = -1/x^2
        let r = RatFunc::power(FieldElem::one(), -1);
        assert_eq!(r.derivative(), RatFunc::power(FieldElem::from_int(-1), -2));
    }

    #[test]
    fn render_lowest_terms() {
        let r = normalize(p(&[4, 0, -20, 0, -3]), Poly::monomial(16.into(), 6)).unwrap();
        assert_eq!(r.render("x"), "(-3*x^4-20*x^2+4)/(16*x^6)");
        let r = RatFunc::power(FieldElem::from_rat(rat(-1, 4)), -2);
        assert_eq!(r.render("z"), "-1/(4*z^2)");
        let r = RatFunc::power(FieldElem::one(), -1);
        assert_eq!(r.render("x"), "1/x");
        let r = RatFunc::power(FieldElem::one(), -5).scale(&FieldElem::from_int(-1));
        assert_eq!(r.render("r"), "-1/r^5");
    }
}
