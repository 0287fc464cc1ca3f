//! Elements of `Q_p` at finite precision.

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PadicError;
use crate::residue::{sqrt_mod_p, ResidueElement};
use crate::valuation::{pow_p, split_p};

/// Absolute precision of an exact zero.
pub const EXACT: i64 = i64::MAX;

/// `p^val * unit`, with `unit` known modulo `p^prec`.
///
/// A zero carries its absolute precision in `val` (`EXACT` for the exact
/// zero) and has `unit == 0`, `prec == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicScalar {
    p: u64,
    val: i64,
    unit: BigInt,
    prec: u32,
}

/// Which square root `hensel_sqrt` returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqrtBranch {
    /// Residue of the root in `[1, (p-1)/2]`; for a principal unit this is
    /// the root in `1 + pZ_p`.
    Principal,
    /// The negative of the principal root.
    Negated,
    /// The root congruent to the given residue.
    Residue(u64),
}

impl PadicScalar {
    pub fn zero(p: u64) -> Self {
        PadicScalar { p, val: EXACT, unit: BigInt::zero(), prec: 0 }
    }

    /// `O(p^abs)`.
    pub fn zero_mod(p: u64, abs: i64) -> Self {
        PadicScalar { p, val: abs, unit: BigInt::zero(), prec: 0 }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Self::from_int(p, 1, prec)
    }

    pub fn from_int(p: u64, n: i64, prec: u32) -> Self {
        Self::from_bigint(p, &BigInt::from(n), prec)
    }

    pub fn from_bigint(p: u64, n: &BigInt, prec: u32) -> Self {
        if n.is_zero() {
            return Self::zero(p);
        }
        let (v, m) = split_p(p, n);
        Self::from_unit(p, v as i64, m, prec)
    }

    /// `p^e` for a possibly huge exponent; beyond `cap` it is returned as
    /// `O(p^cap)`.
    pub fn p_power(p: u64, e: &BigInt, prec: u32, cap: i64) -> Self {
        match e.to_i64() {
            Some(v) if v < cap => PadicScalar { p, val: v, unit: BigInt::one(), prec: prec.max(1) },
            _ if e.is_negative() => panic!("p_power: exponent below i64 range"),
            _ => Self::zero_mod(p, cap),
        }
    }

    pub fn from_rational(p: u64, q: &BigRational, prec: u32) -> Self {
        if q.is_zero() {
            return Self::zero(p);
        }
        let (vn, n) = split_p(p, q.numer());
        let (vd, d) = split_p(p, q.denom());
        let modulus = pow_p(p, prec);
        let dinv = d.mod_floor(&modulus).modinv(&modulus).expect("unit denominator");
        let unit = (n * dinv).mod_floor(&modulus);
        PadicScalar { p, val: vn as i64 - vd as i64, unit, prec }
    }

    /// `p^val * unit` with `unit` prime to `p`; reduced mod `p^prec`.
    pub fn from_unit(p: u64, val: i64, unit: BigInt, prec: u32) -> Self {
        assert!(prec > 0, "from_unit needs positive precision");
        let unit = unit.mod_floor(&pow_p(p, prec));
        debug_assert!(!(&unit % p).is_zero());
        PadicScalar { p, val, unit, prec }
    }

    /// The scalar `p^shift * s`, where `s` is known modulo `p^width`.
    pub fn from_residue(p: u64, shift: i64, s: BigInt, width: u32) -> Self {
        let modulus = pow_p(p, width);
        let s = s.mod_floor(&modulus);
        if s.is_zero() {
            return Self::zero_mod(p, shift.saturating_add(width as i64));
        }
        let (v, u) = split_p(p, &s);
        PadicScalar { p, val: shift + v as i64, unit: u, prec: width - v as u32 }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_zero() && self.val == EXACT
    }

    /// Valuation, `None` when the scalar is zero at its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// Valuation, or the absolute precision for a zero.
    pub fn valuation_lb(&self) -> i64 {
        self.val
    }

    /// Relative precision (number of known unit digits).
    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The scalar is known modulo `p^abs_precision`.
    pub fn abs_precision(&self) -> i64 {
        self.val.saturating_add(self.prec as i64)
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Base-`p` digits of the unit, little-endian, `prec` of them.
    pub fn digits(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.prec as usize);
        let mut u = self.unit.clone();
        let pb = BigInt::from(self.p);
        for _ in 0..self.prec {
            let (q, r) = u.div_rem(&pb);
            out.push(r.to_u64().unwrap());
            u = q;
        }
        out
    }

    /// The integer-or-rational representative `p^val * unit`.
    pub fn to_rational(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let pb = BigInt::from(self.p);
        if self.val >= 0 {
            BigRational::from_integer(&self.unit * pb.pow(self.val as u32))
        } else {
            BigRational::new(self.unit.clone(), pb.pow((-self.val) as u32))
        }
    }

    /// Lowers the absolute precision to at most `abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if self.is_zero() {
            return Self::zero_mod(self.p, min(self.val, abs));
        }
        if abs <= self.val {
            return Self::zero_mod(self.p, abs);
        }
        let width = abs - self.val;
        if width >= self.prec as i64 {
            return self.clone();
        }
        let width = width as u32;
        PadicScalar { p: self.p, val: self.val, unit: self.unit.mod_floor(&pow_p(self.p, width)), prec: width }
    }

    /// Lowers the relative precision to at most `prec` digits.
    pub fn with_precision(&self, prec: u32) -> Self {
        if self.is_zero() || prec >= self.prec {
            return self.clone();
        }
        self.truncate(self.val + prec as i64)
    }

    fn check_prime(&self, o: &Self) {
        assert_eq!(self.p, o.p, "scalars over different primes");
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        self.check_prime(o);
        if self.is_exact_zero() {
            return o.clone();
        }
        if o.is_exact_zero() {
            return self.clone();
        }
        let abs = min(self.abs_precision(), o.abs_precision());
        match (self.is_zero(), o.is_zero()) {
            (true, true) => Self::zero_mod(self.p, abs),
            (true, false) => o.truncate(abs),
            (false, true) => self.truncate(abs),
            (false, false) => {
                let m = min(self.val, o.val);
                if abs <= m {
                    return Self::zero_mod(self.p, abs);
                }
                let width = abs - m;
                let term = |x: &Self| {
                    let d = x.val - m;
                    if d >= width {
                        BigInt::zero()
                    } else {
                        &x.unit * pow_p(self.p, d as u32)
                    }
                };
                Self::from_residue(self.p, m, term(self) + term(o), width as u32)
            }
        }
    }

    pub fn neg_ref(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = pow_p(self.p, self.prec);
        PadicScalar { p: self.p, val: self.val, unit: (&m - &self.unit).mod_floor(&m), prec: self.prec }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        self.check_prime(o);
        if self.is_exact_zero() || o.is_exact_zero() {
            return Self::zero(self.p);
        }
        match (self.is_zero(), o.is_zero()) {
            (true, true) => Self::zero_mod(self.p, self.val.saturating_add(o.val)),
            (true, false) => Self::zero_mod(self.p, self.val.saturating_add(o.val)),
            (false, true) => Self::zero_mod(self.p, self.val.saturating_add(o.val)),
            (false, false) => {
                let prec = min(self.prec, o.prec);
                let unit = (&self.unit * &o.unit).mod_floor(&pow_p(self.p, prec));
                PadicScalar { p: self.p, val: self.val + o.val, unit, prec }
            }
        }
    }

    /// Multiplies by `p^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut r = self.clone();
        if !r.is_exact_zero() {
            r.val = r.val.saturating_add(k);
        }
        r
    }

    pub fn inv(&self) -> Result<Self, PadicError> {
        if self.is_zero() {
            return Err(PadicError::DivisionByZero);
        }
        let m = pow_p(self.p, self.prec);
        let unit = self.unit.modinv(&m).expect("unit is invertible");
        Ok(PadicScalar { p: self.p, val: -self.val, unit, prec: self.prec })
    }

    pub fn div(&self, o: &Self) -> Result<Self, PadicError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, PadicError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if e == 0 {
            return Ok(Self::one(self.p, self.prec.max(1)));
        }
        if self.is_zero() {
            return Ok(if self.is_exact_zero() {
                self.clone()
            } else {
                Self::zero_mod(self.p, self.val.saturating_mul(e))
            });
        }
        let m = pow_p(self.p, self.prec);
        let unit = self.unit.modpow(&BigInt::from(e), &m);
        Ok(PadicScalar { p: self.p, val: self.val * e, unit, prec: self.prec })
    }

    /// Power of a unit by a possibly huge non-negative integer.
    pub fn pow_big(&self, e: &BigInt) -> Result<Self, PadicError> {
        if e.is_negative() {
            return self.inv()?.pow_big(&-e);
        }
        if let Some(small) = e.to_i64() {
            if self.val == 0 || small == 0 {
                return self.pow(small);
            }
        }
        if self.is_zero() || self.val != 0 {
            return Err(PadicError::PrecisionExhausted);
        }
        let m = pow_p(self.p, self.prec);
        Ok(PadicScalar { p: self.p, val: 0, unit: self.unit.modpow(e, &m), prec: self.prec })
    }

    /// True when `self - o` is zero at the shared precision.
    pub fn eq_at_precision(&self, o: &Self) -> bool {
        self.sub_ref(o).is_zero()
    }

    /// Square root via Newton iteration.
    pub fn hensel_sqrt(&self, branch: SqrtBranch) -> Result<Self, PadicError> {
        if self.is_exact_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(Self::zero_mod(self.p, self.val.div_euclid(2) + self.val.rem_euclid(2)));
        }
        if self.val % 2 != 0 {
            return Err(PadicError::OddValuation);
        }
        let p = self.p;
        let u0 = (&self.unit % p).to_u64().unwrap();
        let r = sqrt_mod_p(u0, p).ok_or(PadicError::NonResidue)?;
        let r0 = match branch {
            SqrtBranch::Principal => r,
            SqrtBranch::Negated => p - r,
            SqrtBranch::Residue(c) => {
                let c = c % p;
                if c * c % p != u0 {
                    return Err(PadicError::NonResidue);
                }
                c
            }
        };
        let m = pow_p(p, self.prec);
        let half = BigInt::from(2).modinv(&m).unwrap();
        let mut x = BigInt::from(r0);
        let mut correct = 1u32;
        while correct < self.prec {
            let xi = x.modinv(&m).unwrap();
            x = ((&x + &self.unit * xi) * &half).mod_floor(&m);
            correct *= 2;
        }
        Ok(PadicScalar { p, val: self.val / 2, unit: x.mod_floor(&m), prec: self.prec })
    }

    /// Iwasawa logarithm, `log p = 0`. The result has absolute precision
    /// equal to the relative precision of `self`.
    pub fn iwasawa_log(&self) -> Result<Self, PadicError> {
        if self.is_zero() {
            return Err(PadicError::ZeroArgument);
        }
        let p = self.p;
        let n = self.prec as i64;
        let mut guard = 0u32;
        let mut imax = 1i64;
        // terms z^i/i with i - v_p(i) >= n vanish mod p^n
        while imax - (guard as i64) < n + 1 {
            imax += 1;
            if (imax as u64) >= p.pow(guard + 1) {
                guard += 1;
            }
        }
        let work = pow_p(p, self.prec + guard);
        let z = (self.unit.modpow(&BigInt::from(p - 1), &work) - 1u32).mod_floor(&work);
        let mut acc = BigInt::zero();
        let mut zi = BigInt::one();
        for i in 1..=imax {
            zi = (&zi * &z).mod_floor(&work);
            let (vi, ui) = split_p(p, &BigInt::from(i));
            let pv = pow_p(p, vi as u32);
            debug_assert!((&zi % &pv).is_zero());
            let q = &zi / &pv;
            let ui_inv = ui.modinv(&work).unwrap();
            let term = (q * ui_inv).mod_floor(&work);
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let out_mod = pow_p(p, self.prec);
        let pm1 = BigInt::from(p - 1).modinv(&out_mod).unwrap();
        let s = (acc * pm1).mod_floor(&out_mod);
        Ok(Self::from_residue(p, 0, s, self.prec))
    }

    /// `self^c` for a principal unit `self` and `v(c) >= 0`.
    pub fn unit_pow(&self, c: &PadicScalar) -> Result<Self, PadicError> {
        let p = self.p;
        if self.is_zero() || self.val != 0 || (&self.unit % p) != BigInt::one() {
            return Err(PadicError::NotPrincipalUnit);
        }
        if c.is_exact_zero() {
            return Ok(Self::one(p, self.prec));
        }
        if c.val < 0 {
            return Err(PadicError::NegativeValuation);
        }
        let w = match Self::from_residue(p, 0, &self.unit - 1u32, self.prec).valuation() {
            Some(w) => w,
            None => self.prec as i64,
        };
        let abs = min(self.prec as i64, c.abs_precision().saturating_add(w));
        let e = if c.is_zero() { BigInt::zero() } else { &c.unit * pow_p(p, c.val as u32) };
        let m = pow_p(p, abs as u32);
        Ok(Self::from_residue(p, 0, self.unit.modpow(&e, &m), abs as u32))
    }

    /// Image in the residue field `F_p`.
    pub fn residue_image(&self) -> Result<ResidueElement, PadicError> {
        if self.is_zero() {
            return if self.val >= 1 {
                Ok(ResidueElement::new(self.p, 0))
            } else {
                Err(PadicError::PrecisionExhausted)
            };
        }
        if self.val < 0 {
            return Err(PadicError::NegativeValuation);
        }
        if self.val > 0 {
            return Ok(ResidueElement::new(self.p, 0));
        }
        Ok(ResidueElement::new(self.p, (&self.unit % self.p).to_i64().unwrap()))
    }
}

impl fmt::Display for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact_zero() {
            return write!(f, "0");
        }
        if self.is_zero() {
            return write!(f, "{}^{}*@0", self.p, self.val);
        }
        let d: Vec<String> = self.digits().iter().map(|x| x.to_string()).collect();
        write!(f, "{}^{}*{}@{}", self.p, self.val, d.join(","), self.prec)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&PadicScalar> for &PadicScalar {
            type Output = PadicScalar;
            fn $m(self, o: &PadicScalar) -> PadicScalar {
                self.$imp(o)
            }
        }
        impl $tr<PadicScalar> for PadicScalar {
            type Output = PadicScalar;
            fn $m(self, o: PadicScalar) -> PadicScalar {
                self.$imp(&o)
            }
        }
        impl $tr<&PadicScalar> for PadicScalar {
            type Output = PadicScalar;
            fn $m(self, o: &PadicScalar) -> PadicScalar {
                self.$imp(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        self.neg_ref()
    }
}

impl Neg for &PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u64, n: i64) -> PadicScalar {
        PadicScalar::from_int(p, n, 20)
    }

    #[test]
    fn sum_raises_valuation() {
        let x = s(5, 5) + s(5, 20);
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.unit(), &BigInt::one());
    }

    #[test]
    fn inverse_round_trip() {
        let x = s(3, 4);
        let y = x.mul_ref(&x.inv().unwrap());
        assert!(y.eq_at_precision(&s(3, 1)));
    }

    #[test]
    fn cancellation_leaves_bounded_zero() {
        let x = s(7, 49).sub_ref(&s(7, 49));
        assert!(x.is_zero());
        assert!(!x.is_exact_zero());
        assert_eq!(x.abs_precision(), 22);
    }

    #[test]
    fn text_form() {
        let x = PadicScalar::from_int(3, 3 + 2 * 9, 3);
        assert_eq!(x.to_string(), "3^1*1,2,0@3");
    }

    #[test]
    fn sqrt_of_four_on_chosen_branch() {
        let r = s(3, 4).hensel_sqrt(SqrtBranch::Residue(2)).unwrap();
        assert!(r.eq_at_precision(&s(3, 2)));
        let r = s(3, 4).hensel_sqrt(SqrtBranch::Principal).unwrap();
        assert!(r.eq_at_precision(&s(3, -2)));
    }

    #[test]
    fn log_of_p_is_zero_and_log_four_has_valuation_one() {
        assert!(s(3, 3).iwasawa_log().unwrap().is_zero());
        assert_eq!(s(3, 4).iwasawa_log().unwrap().valuation(), Some(1));
    }

    #[test]
    fn log_of_teichmuller_root_vanishes() {
        // 2 has order dividing p-1 only up to a principal unit; 2^(p-1) is principal
        let x = s(5, 2).pow(4).unwrap();
        let l1 = x.iwasawa_log().unwrap();
        let l2 = s(5, 2).iwasawa_log().unwrap();
        assert!(l1.eq_at_precision(&(&l2 * &s(5, 4))));
    }

    #[test]
    fn unit_pow_matches_integer_power() {
        let u = s(5, 6);
        let e = u.unit_pow(&s(5, 3)).unwrap();
        assert!(e.eq_at_precision(&s(5, 216)));
    }

    #[test]
    fn residue_of_five_halves_mod_seven() {
        let q = BigRational::new(5.into(), 2.into());
        let x = PadicScalar::from_rational(7, &q, 5);
        assert_eq!(x.residue_image().unwrap().as_fp(), Some(6));
    }
}
