//! Arbitrary-precision rationals and the integer helpers the rest of the
//! exact layer leans on (perfect squares, squarefree parts, divisors).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction with positive denominator; `0` is `0/1`.
pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Huge components: scale both down by the same power of two.
    let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
    let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().to_biguint()?;
    let d = q.denom().to_biguint()?;
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rat::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Splits `n = k² · s` with `s` squarefree. Returns `None` when `n` is too
/// large to factor by trial division.
pub fn squarefree_decompose(n: &BigUint) -> Option<(BigUint, BigUint)> {
    if n.is_zero() {
        return Some((BigUint::zero(), BigUint::zero()));
    }
    let mut m = n.to_u128()?;
    let mut k: u128 = 1;
    let mut s: u128 = 1;
    let mut p: u128 = 2;
    // Trial division up to the cube root; the cofactor then has at most two
    // prime factors, so it is either squarefree or a perfect square.
    while p * p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
        if p > 2_000_000 {
            return None;
        }
    }
    if m > 1 {
        let r = m.sqrt();
        if r * r == m {
            k *= r;
        } else {
            s *= m;
        }
    }
    Some((BigUint::from(k), BigUint::from(s)))
}

/// Writes `q = c² · s` with `c` rational and `s` a squarefree integer
/// (`s` carries the sign of `q`).
pub fn rat_square_split(q: &Rat) -> Option<(Rat, BigInt)> {
    if q.is_zero() {
        return Some((Rat::zero(), BigInt::zero()));
    }
    // q = n/d = n·d / d²
    let nd = (q.numer() * q.denom()).abs().to_biguint()?;
    let (k, s) = squarefree_decompose(&nd)?;
    let c = Rat::new(BigInt::from(k), q.denom().clone());
    let sign = if q.is_negative() { Sign::Minus } else { Sign::Plus };
    Some((c, BigInt::from_biguint(sign, s)))
}

/// Positive divisors of a non-zero integer, ascending. `None` if the number
/// is too large to factor.
pub fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs().to_u128()?;
    if m == 0 {
        return None;
    }
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut p: u128 = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
        if p > 10_000_000 {
            return None;
        }
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut out = vec![1u128];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = 1u128;
            for _ in 0..=e {
                next.push(d * pk);
                pk *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Some(out.into_iter().map(BigInt::from).collect())
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
