//! Exact valuations (half-integral in the ramified extension) and helpers on
//! big integers and rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;

/// A valuation in `Q ∪ {±∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    NegInf,
    Finite(Rational64),
    PosInf,
}

impl Valuation {
    pub fn int(v: i64) -> Self {
        Valuation::Finite(Rational64::from_integer(v))
    }

    pub fn finite(self) -> Option<Rational64> {
        match self {
            Valuation::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_integral(self) -> bool {
        matches!(self, Valuation::Finite(v) if v.is_integer())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::NegInf => write!(f, "-inf"),
            Valuation::PosInf => write!(f, "inf"),
            Valuation::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Splits `n = p^v * m` with `p ∤ m`. `n` must be nonzero.
pub fn split_p(p: u64, n: &BigInt) -> (u64, BigInt) {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0u64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// `v_p(n)`, `None` for zero.
pub fn vp_int(p: u64, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        None
    } else {
        Some(split_p(p, n).0)
    }
}

/// `v_p(q)`, `None` for zero.
pub fn vp_rational(p: u64, q: &BigRational) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let vn = split_p(p, q.numer()).0 as i64;
    let vd = split_p(p, q.denom()).0 as i64;
    Some(vn - vd)
}

/// `p^n` as a big integer.
pub fn pow_p(p: u64, n: u32) -> BigInt {
    BigInt::from(p).pow(n)
}

/// Least non-negative residue of a rational with denominator prime to `p`.
pub fn rational_mod(q: &BigRational, modulus: &BigInt) -> Option<BigInt> {
    let d = q.denom().mod_floor(modulus);
    let inv = d.modinv(modulus)?;
    Some((q.numer() * inv).mod_floor(modulus))
}
