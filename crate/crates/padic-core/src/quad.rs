//! The ramified quadratic extension `Q_p(π)`, `π² = p`.

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::PadicError;
use crate::residue::ResidueElement;
use crate::scalar::{PadicScalar, SqrtBranch};
use crate::valuation::{vp_rational, Valuation};

/// `a + b·π` with `a, b` in `Q_p` at finite precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtScalar {
    pub a: PadicScalar,
    pub b: PadicScalar,
}

fn half(v: i64) -> Rational64 {
    Rational64::new(v, 2)
}

impl QuadExtScalar {
    pub fn new(a: PadicScalar, b: PadicScalar) -> Self {
        assert_eq!(a.prime(), b.prime());
        QuadExtScalar { a, b }
    }

    pub fn from_base(a: PadicScalar) -> Self {
        let p = a.prime();
        QuadExtScalar { a, b: PadicScalar::zero(p) }
    }

    pub fn pi(p: u64, prec: u32) -> Self {
        QuadExtScalar { a: PadicScalar::zero(p), b: PadicScalar::one(p, prec) }
    }

    /// `p^{e/2}` for an integer `e`.
    pub fn sqrt_p_power(p: u64, e: i64, prec: u32) -> Self {
        let base = PadicScalar::one(p, prec).shift(e.div_euclid(2));
        if e.rem_euclid(2) == 0 {
            Self::from_base(base)
        } else {
            QuadExtScalar { a: PadicScalar::zero(p), b: base }
        }
    }

    pub fn prime(&self) -> u64 {
        self.a.prime()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_base(&self) -> bool {
        self.b.is_exact_zero()
    }

    /// Twice the valuation (an integer), or `None` when zero at precision.
    fn val2(&self) -> Option<i64> {
        let va = self.a.valuation().map(|v| 2 * v);
        let vb = self.b.valuation().map(|v| 2 * v + 1);
        let lim = self.abs2();
        let best = match (va, vb) {
            (Some(x), Some(y)) => Some(min(x, y)),
            (x, None) => x,
            (None, y) => y,
        }?;
        (best < lim).then_some(best)
    }

    /// Twice the absolute precision.
    fn abs2(&self) -> i64 {
        min(self.a.abs_precision().saturating_mul(2), self.b.abs_precision().saturating_mul(2).saturating_add(1))
    }

    pub fn valuation(&self) -> Option<Rational64> {
        self.val2().map(half)
    }

    /// Valuation, or the absolute precision for a zero.
    pub fn valuation_lb(&self) -> Rational64 {
        match self.val2() {
            Some(v) => half(v),
            None => {
                let a = self.abs2();
                if a >= i64::MAX / 4 {
                    Rational64::from_integer(i64::MAX / 4)
                } else {
                    half(a)
                }
            }
        }
    }

    pub fn abs_precision(&self) -> Rational64 {
        let a = self.abs2();
        if a >= i64::MAX / 4 {
            Rational64::from_integer(i64::MAX / 4)
        } else {
            half(a)
        }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        QuadExtScalar { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        QuadExtScalar { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg_ref(&self) -> Self {
        QuadExtScalar { a: -&self.a, b: -&self.b }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let bd = (&self.b * &o.b).shift(1);
        QuadExtScalar { a: &(&self.a * &o.a) + &bd, b: &(&self.a * &o.b) + &(&self.b * &o.a) }
    }

    pub fn scale(&self, c: &PadicScalar) -> Self {
        QuadExtScalar { a: &self.a * c, b: &self.b * c }
    }

    pub fn conj(&self) -> Self {
        QuadExtScalar { a: self.a.clone(), b: -&self.b }
    }

    /// `a² - p·b²`.
    pub fn norm(&self) -> PadicScalar {
        &(&self.a * &self.a) - &(&self.b * &self.b).shift(1)
    }

    pub fn inv(&self) -> Result<Self, PadicError> {
        if self.is_zero() {
            return Err(PadicError::DivisionByZero);
        }
        let n = self.norm().inv()?;
        Ok(self.conj().scale(&n))
    }

    pub fn div(&self, o: &Self) -> Result<Self, PadicError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, PadicError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let p = self.prime();
        let prec = self.a.precision().max(self.b.precision()).max(1);
        let mut acc = Self::from_base(PadicScalar::one(p, prec));
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn eq_at_precision(&self, o: &Self) -> bool {
        self.sub_ref(o).is_zero()
    }

    /// Square root. Integral valuation is required; the unit part is
    /// lifted by Newton iteration from the chosen residue root.
    pub fn hensel_sqrt(&self, branch: SqrtBranch) -> Result<Self, PadicError> {
        let p = self.prime();
        if self.b.is_exact_zero() {
            if let Some(v) = self.a.valuation() {
                if v % 2 != 0 {
                    // p^{2m+1} u = (p^m π sqrt(u))^2
                    let u = self.a.shift(-1);
                    let r = u.hensel_sqrt(branch)?;
                    return Ok(QuadExtScalar { a: PadicScalar::zero(p), b: r });
                }
            }
            return Ok(Self::from_base(self.a.hensel_sqrt(branch)?));
        }
        let v2 = self.val2().ok_or(PadicError::PrecisionExhausted)?;
        if v2 % 2 != 0 {
            return Err(PadicError::OddValuation);
        }
        let m = v2 / 2;
        let w = QuadExtScalar { a: self.a.shift(-m), b: self.b.shift(-m) };
        let r0 = w.a.hensel_sqrt(branch)?;
        let mut z = Self::from_base(r0);
        let two_inv = PadicScalar::from_int(p, 2, w.a.precision().max(1)).inv()?;
        let target = w.abs_precision();
        let mut good = 1i64;
        // each step doubles the number of correct π-adic digits
        while Rational64::from_integer(good) < target * 2 + 2 {
            let zi = z.inv()?;
            z = z.add_ref(&w.mul_ref(&zi)).scale(&two_inv);
            good *= 2;
        }
        let half_m = m.div_euclid(2);
        let r = QuadExtScalar { a: z.a.shift(half_m), b: z.b.shift(half_m) };
        Ok(if m.rem_euclid(2) == 0 { r } else { r.mul_ref(&Self::pi(p, w.a.precision().max(1))) })
    }

    /// Image in `F_p` (π maps to 0).
    pub fn residue_image(&self) -> Result<ResidueElement, PadicError> {
        let v = self.valuation_lb();
        if v < Rational64::zero() {
            return Err(PadicError::NegativeValuation);
        }
        self.a.residue_image()
    }
}

impl fmt::Display for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_exact_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}*pi", self.a, self.b)
        }
    }
}

impl Add<&QuadExtScalar> for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn add(self, o: &QuadExtScalar) -> QuadExtScalar {
        self.add_ref(o)
    }
}

impl Sub<&QuadExtScalar> for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn sub(self, o: &QuadExtScalar) -> QuadExtScalar {
        self.sub_ref(o)
    }
}

impl Mul<&QuadExtScalar> for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn mul(self, o: &QuadExtScalar) -> QuadExtScalar {
        self.mul_ref(o)
    }
}

impl Neg for &QuadExtScalar {
    type Output = QuadExtScalar;
    fn neg(self) -> QuadExtScalar {
        self.neg_ref()
    }
}

/// Exact element `a + b·π` of `Q(√p)`, with `a, b` rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRational { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadRational { a, b: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `π^e`.
    pub fn pi_power(p: u64, e: i64) -> Self {
        let base = BigRational::from_integer(BigInt::from(p));
        let half = e.div_euclid(2);
        let c = if half >= 0 { base.pow(half as i32) } else { base.recip().pow((-half) as i32) };
        if e.rem_euclid(2) == 0 {
            Self::rational(c)
        } else {
            QuadRational { a: BigRational::zero(), b: c }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact `p`-adic valuation: `min(v(a), v(b) + 1/2)`.
    pub fn valuation(&self, p: u64) -> Valuation {
        let va = vp_rational(p, &self.a).map(|v| 2 * v);
        let vb = vp_rational(p, &self.b).map(|v| 2 * v + 1);
        match (va, vb) {
            (None, None) => Valuation::PosInf,
            (Some(x), None) | (None, Some(x)) => Valuation::Finite(half(x)),
            (Some(x), Some(y)) => Valuation::Finite(half(min(x, y))),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        QuadRational { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuadRational { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> Self {
        QuadRational { a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, o: &Self, p: u64) -> Self {
        let pr = BigRational::from_integer(BigInt::from(p));
        QuadRational { a: &self.a * &o.a + pr * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadRational { a: &self.a * c, b: &self.b * c }
    }

    pub fn inv(&self, p: u64) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let pr = BigRational::from_integer(BigInt::from(p));
        let n = &self.a * &self.a - pr * &self.b * &self.b;
        Some(QuadRational { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn pow(&self, e: u32, p: u64) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self, p);
        }
        acc
    }

    pub fn to_scalar(&self, p: u64, prec: u32) -> QuadExtScalar {
        QuadExtScalar { a: PadicScalar::from_rational(p, &self.a, prec), b: PadicScalar::from_rational(p, &self.b, prec) }
    }

    /// Image in `F_p` (π maps to 0); requires non-negative valuation.
    pub fn residue_image(&self, p: u64) -> Result<ResidueElement, PadicError> {
        match self.valuation(p) {
            Valuation::PosInf => Ok(ResidueElement::new(p, 0)),
            Valuation::Finite(v) if v < Rational64::zero() => Err(PadicError::NegativeValuation),
            _ => PadicScalar::from_rational(p, &self.a, 1).residue_image(),
        }
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_one() {
            write!(f, "{}+pi", self.a)
        } else {
            write!(f, "{}+{}*pi", self.a, self.b)
        }
    }
}
