//! Elements of a real quadratic field ℚ(√d).
//!
//! Every computation works in ℚ extended by at most one square root. The
//! radicand is fixed lazily by [`FieldCtx`] the first time an irrational
//! square root is needed; mixing two different radicands in one arithmetic
//! operation is a logic error and panics, so every radical must enter
//! through the context.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::{rat_square_split, rat_sqrt_exact, rat_to_f64, Rat};
use super::AlgError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    rational: Rat,
    radical: Rat,
    /// Squarefree, `0` whenever `radical == 0`.
    radicand: u64,
}

fn join_radicands(d1: u64, d2: u64) -> u64 {
    match (d1, d2) {
        (0, d) | (d, 0) => d,
        (a, b) if a == b => a,
        (a, b) => panic!("incompatible quadratic radicals √{a} and √{b}"),
    }
}

impl FieldElem {
    pub fn new(rational: Rat, radical: Rat, radicand: u64) -> Self {
        let mut e = FieldElem {
            rational,
            radical,
            radicand,
        };
        e.canonicalize();
        e
    }

    fn canonicalize(&mut self) {
        if self.radicand == 1 {
            let r = std::mem::replace(&mut self.radical, Rat::zero());
            self.rational += r;
            self.radicand = 0;
        }
        if self.radical.is_zero() || self.radicand == 0 {
            self.radical = Rat::zero();
            self.radicand = 0;
        }
    }

    pub fn from_rat(q: Rat) -> Self {
        FieldElem {
            rational: q,
            radical: Rat::zero(),
            radicand: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn radical_part(&self) -> &Rat {
        &self.radical
    }

    /// `0` for rational elements.
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.radical.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rat()
            .filter(|q| q.denom().is_one())
            .map(|q| q.numer().clone())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// `a − b√d`.
    pub fn conj(&self) -> Self {
        FieldElem {
            rational: self.rational.clone(),
            radical: -self.radical.clone(),
            radicand: self.radicand,
        }
    }

    /// `a² − d b²`.
    pub fn norm(&self) -> Rat {
        let d = Rat::from_integer(BigInt::from(self.radicand));
        &self.rational * &self.rational - d * &self.radical * &self.radical
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in ℚ(√d)");
        let n = self.norm();
        let c = self.conj();
        FieldElem::new(c.rational / &n, c.radical / &n, c.radicand)
    }

    pub fn scale(&self, q: &Rat) -> Self {
        FieldElem::new(&self.rational * q, &self.radical * q, self.radicand)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = FieldElem::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rational) + rat_to_f64(&self.radical) * (self.radicand as f64).sqrt()
    }

    /// Sign of the real number `a + b√d`, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.radical);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with d b²
        let lhs = &self.rational * &self.rational;
        let rhs = Rat::from_integer(BigInt::from(self.radicand)) * &self.radical * &self.radical;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Exact real ordering.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    /// Lexicographic (rational part, radical part) order used for pole lists.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.rational
            .cmp(&other.rational)
            .then_with(|| self.radical.cmp(&other.radical))
    }

    /// Renders in the expression grammar: `3/4`, `sqrt(2)`, `(1+3/2*sqrt(5))`.
    /// `atomic` wraps compound values in parentheses.
    pub fn render(&self, atomic: bool) -> String {
        if self.is_rational() {
            let s = render_rat(&self.rational);
            if atomic && self.rational.is_negative() {
                return format!("({s})");
            }
            return s;
        }
        let rad = render_radical(&self.radical, self.radicand);
        if self.rational.is_zero() {
            if atomic && (self.radical.is_negative() || !self.radical.is_one()) {
                return format!("({rad})");
            }
            return rad;
        }
        let joined = if rad.starts_with('-') {
            format!("{}{}", render_rat(&self.rational), rad)
        } else {
            format!("{}+{}", render_rat(&self.rational), rad)
        };
        if atomic {
            format!("({joined})")
        } else {
            joined
        }
    }
}

fn sign_of(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

pub(crate) fn render_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn render_radical(coef: &Rat, d: u64) -> String {
    if coef.is_one() {
        format!("sqrt({d})")
    } else if (-coef.clone()).is_one() {
        format!("-sqrt({d})")
    } else {
        format!("{}*sqrt({d})", render_rat(coef))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl From<Rat> for FieldElem {
    fn from(q: Rat) -> Self {
        FieldElem::from_rat(q)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        let d = join_radicands(self.radicand, o.radicand);
        FieldElem::new(&self.rational + &o.rational, &self.radical + &o.radical, d)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        let d = join_radicands(self.radicand, o.radicand);
        FieldElem::new(&self.rational - &o.rational, &self.radical - &o.radical, d)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        let d = join_radicands(self.radicand, o.radicand);
        let dq = Rat::from_integer(BigInt::from(d));
        let a = &self.rational * &o.rational + dq * &self.radical * &o.radical;
        let b = &self.rational * &o.radical + &self.radical * &o.rational;
        FieldElem::new(a, b, d)
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn div(self, o: &FieldElem) -> FieldElem {
        self * &o.inv()
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            rational: -self.rational.clone(),
            radical: -self.radical.clone(),
            radicand: self.radicand,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem { (&self).$m(o) }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

/// Tracks the single radicand a computation is allowed to use.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldCtx {
    radicand: Option<u64>,
}

impl FieldCtx {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn radicand(&self) -> Option<u64> {
        self.radicand
    }

    fn adopt(&mut self, d: u64) -> Result<(), AlgError> {
        match self.radicand {
            None => {
                self.radicand = Some(d);
                Ok(())
            }
            Some(cur) if cur == d => Ok(()),
            Some(cur) => Err(AlgError::UnsupportedExtension {
                detail: format!("√{d} is not in ℚ(√{cur})"),
            }),
        }
    }

    /// Registers the radicand an externally built element already uses.
    pub fn absorb(&mut self, x: &FieldElem) -> Result<(), AlgError> {
        if x.radicand != 0 {
            self.adopt(x.radicand)?;
        }
        Ok(())
    }

    /// Square root inside the working field; the root with non-negative
    /// real value is returned.
    pub fn sqrt(&mut self, x: &FieldElem) -> Result<FieldElem, AlgError> {
        self.absorb(x)?;
        if x.is_zero() {
            return Ok(FieldElem::zero());
        }
        if x.is_rational() {
            return self.sqrt_rat(&x.rational);
        }
        // (u + v√d)² = a + b√d  ⇔  u² + d v² = a, 2uv = b.
        let d = x.radicand;
        let fail = || AlgError::UnsupportedExtension {
            detail: format!("√({x}) is not in ℚ(√{d})"),
        };
        let t = rat_sqrt_exact(&x.norm()).ok_or_else(fail)?;
        let two = Rat::from_integer(BigInt::from(2));
        for u2 in [(&x.rational + &t) / &two, (&x.rational - &t) / &two] {
            if let Some(u) = rat_sqrt_exact(&u2) {
                if u.is_zero() {
                    continue;
                }
                let v = &x.radical / (&two * &u);
                let root = FieldElem::new(u, v, d);
                return Ok(if root.signum() < 0 { -root } else { root });
            }
            // u = 0 branch: v² d = a, 0 = b is impossible here since b ≠ 0.
        }
        Err(fail())
    }

    fn sqrt_rat(&mut self, q: &Rat) -> Result<FieldElem, AlgError> {
        if q.is_negative() {
            return Err(AlgError::UnsupportedExtension {
                detail: format!("√({}) is not real", render_rat(q)),
            });
        }
        if let Some(r) = rat_sqrt_exact(q) {
            return Ok(FieldElem::from_rat(r));
        }
        let (c, s) = rat_square_split(q).ok_or_else(|| AlgError::UnsupportedExtension {
            detail: format!("radicand {} too large to factor", render_rat(q)),
        })?;
        let s = s.to_u64().ok_or_else(|| AlgError::UnsupportedExtension {
            detail: format!("radicand {s} exceeds supported range"),
        })?;
        self.adopt(s)?;
        Ok(FieldElem::new(Rat::zero(), c, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;
    use proptest::prelude::*;

    fn el(a: (i64, i64), b: (i64, i64), d: u64) -> FieldElem {
        FieldElem::new(rat(a.0, a.1), rat(b.0, b.1), d)
    }

    #[test]
    fn canonical_collapse() {
        let x = el((1, 2), (3, 1), 1);
        assert!(x.is_rational());
        assert_eq!(x, FieldElem::from_rat(rat(7, 2)));
        let y = el((1, 1), (0, 1), 5);
        assert_eq!(y.radicand(), 0);
    }

    #[test]
    fn sqrt_in_context() {
        let mut ctx = FieldCtx::new();
        let r = ctx.sqrt(&FieldElem::from_rat(rat(9, 4))).unwrap();
        assert_eq!(r, FieldElem::from_rat(rat(3, 2)));
        assert_eq!(ctx.radicand(), None);
        let s = ctx.sqrt(&FieldElem::from_rat(rat(8, 1))).unwrap();
        assert_eq!(s, el((0, 1), (2, 1), 2));
        assert_eq!(ctx.radicand(), Some(2));
        assert!(matches!(
            ctx.sqrt(&FieldElem::from_int(3)),
            Err(AlgError::UnsupportedExtension { .. })
        ));
        assert!(ctx.sqrt(&FieldElem::from_int(-1)).is_err());
        // (1 + √2)² = 3 + 2√2
        let t = ctx.sqrt(&el((3, 1), (2, 1), 2)).unwrap();
        assert_eq!(t, el((1, 1), (1, 1), 2));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(el((-3, 2), (1, 1), 2).signum(), -1); // -1.5 + 1.414
        assert_eq!(el((-1, 1), (1, 1), 2).signum(), 1);
        assert_eq!(el((3, 1), (-2, 1), 2).signum(), 1); // 3 - 2.83
        assert_eq!(FieldElem::zero().signum(), 0);
    }

    #[test]
    fn render_forms() {
        assert_eq!(el((1, 2), (-3, 2), 5).to_string(), "1/2-3/2*sqrt(5)");
        assert_eq!(el((0, 1), (1, 1), 2).render(true), "sqrt(2)");
        assert_eq!(FieldElem::from_rat(rat(-3, 4)).render(true), "(-3/4)");
    }

    fn arb_elem(d: u64) -> impl Strategy<Value = FieldElem> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(move |(a, b, c, e)| FieldElem::new(rat(a, b), rat(c, e), d))
    }

    proptest! {
        #[test]
        fn mul_associative(x in arb_elem(3), y in arb_elem(3), z in arb_elem(3)) {
            prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn conjugation_multiplicative(x in arb_elem(7), y in arb_elem(7)) {
            prop_assert_eq!((&x * &y).conj(), x.conj() * y.conj());
        }

        #[test]
        fn inverse_roundtrip(x in arb_elem(2)) {
            prop_assume!(!x.is_zero());
            prop_assert!((&x * &x.inv()).is_one());
        }
    }
}
