//! `y_n^2` and the points
//! `(y_n^2, (1+p)^{k_n-1} - 1, y_n^2 - p^r : (1+p)^{k_n-1} - (1+p)^{k-1})`.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use padic_core::valuation::vp_int;
use padic_core::{PadicError, PadicScalar, QuadExtScalar, QuadRational, SqrtBranch};

use crate::error::LimitError;
use crate::params::{sequence_term, LValue, SequenceParams};

/// Digits kept beyond `n + r`.
const GUARD: u64 = 40;

fn base(x: PadicScalar) -> QuadExtScalar {
    QuadExtScalar::from_base(x)
}

fn int(p: u64, n: &BigInt, prec: u32) -> QuadExtScalar {
    base(PadicScalar::from_bigint(p, n, prec))
}

pub(crate) fn shift(x: &QuadExtScalar, k: i64) -> QuadExtScalar {
    QuadExtScalar::new(x.a.shift(k), x.b.shift(k))
}

pub(crate) fn is_exact_zero(x: &QuadExtScalar) -> bool {
    x.a.is_exact_zero() && x.b.is_exact_zero()
}

/// Relative digits used at level `n`: enough for `y_n^2 - p^r` divided by
/// `p^n`, never more than the `2(1 + p^n(p-1))` that resolve `y_n` itself.
pub fn working_precision(params: &SequenceParams, n: u32) -> u32 {
    let p = params.p;
    let full = p.checked_pow(n).and_then(|x| x.checked_mul(p - 1)).map(|x| 2 * (1 + x)).unwrap_or(u64::MAX);
    full.min(n as u64 + params.r() as u64 + GUARD) as u32
}

/// `(1 + u)/2` with `u^2 = 1 - 4p^{k_n-1}/a_n^2`, `u ≡ 1`.
fn half_root(p: u64, kn: &BigInt, a2: &QuadExtScalar, prec: u32) -> Result<QuadExtScalar, LimitError> {
    if is_exact_zero(a2) {
        return Err(LimitError::InvalidParams("a_n vanishes".into()));
    }
    let v2 = a2.valuation().ok_or(PadicError::PrecisionExhausted)?;
    if v2 <= Rational64::zero() {
        return Err(LimitError::InvalidParams("a_n must have positive valuation".into()));
    }
    let e: BigInt = kn - 1;
    if Rational64::from_integer(e.clone().try_into().unwrap_or(i64::MAX)) <= v2 {
        return Err(LimitError::InvalidParams("k_n - 1 must exceed v(a_n^2)".into()));
    }
    let cap = v2.ceil().to_integer() + prec as i64 + 2;
    let pk = base(PadicScalar::p_power(p, &e, prec, cap));
    let one = base(PadicScalar::one(p, prec));
    let four = base(PadicScalar::from_int(p, 4, prec));
    let x = &one - &four.mul_ref(&pk).div(a2)?;
    let u = x.hensel_sqrt(SqrtBranch::Principal)?;
    let two_inv = PadicScalar::from_int(p, 2, prec).inv()?;
    Ok((&one + &u).scale(&two_inv))
}

/// `y_n = a_n(1 + u)/2`, the root of `y^2 - a_n y + p^{k_n-1}` with
/// valuation `v(a_n)`.
pub fn y_root(p: u64, kn: &BigInt, an: &QuadRational, prec: u32) -> Result<QuadExtScalar, LimitError> {
    let a = an.to_scalar(p, prec);
    let h = half_root(p, kn, &a.mul_ref(&a), prec)?;
    Ok(a.mul_ref(&h))
}

/// `y_n^2 = a_n^2((1 + u)/2)^2`.
pub fn y_squared(p: u64, kn: &BigInt, an: &QuadRational, prec: u32) -> Result<QuadExtScalar, LimitError> {
    let a = an.to_scalar(p, prec);
    let a2 = a.mul_ref(&a);
    let h = half_root(p, kn, &a2, prec)?;
    Ok(a2.mul_ref(&h).mul_ref(&h))
}

/// A point of the blow-up chart: base coordinates `(s1, s2)` and the
/// projective pair `(xi1 : xi2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupPoint {
    pub p: u64,
    pub k: u32,
    pub s1: QuadExtScalar,
    pub s2: QuadExtScalar,
    pub xi1: QuadExtScalar,
    pub xi2: QuadExtScalar,
}

/// `(1 : x2/x1)` or `(x1/x2 : 1)`, dividing by the coordinate of least
/// valuation; ties go to `x2`.
pub(crate) fn normalize_pair(x1: &QuadExtScalar, x2: &QuadExtScalar) -> Result<(QuadExtScalar, QuadExtScalar), LimitError> {
    let p = x1.prime();
    let one = |prec: u32| base(PadicScalar::one(p, prec.max(1)));
    match (x1.valuation(), x2.valuation()) {
        (None, None) => Err(LimitError::DegeneratePoint),
        (Some(v1), Some(v2)) if v1 < v2 => Ok((one(x1.a.precision().max(x1.b.precision())), x2.div(x1)?)),
        (Some(_), None) => Ok((one(x1.a.precision().max(x1.b.precision())), x2.div(x1)?)),
        _ => Ok((x1.div(x2)?, one(x2.a.precision().max(x2.b.precision())))),
    }
}

impl BlowupPoint {
    /// The point of the character with parameters `(k_n, y^2)` over the
    /// chart centred at weight `k`.
    pub fn new(p: u64, k: u32, kn: &BigInt, y2: QuadExtScalar, prec: u32) -> Result<Self, LimitError> {
        let r = k - 2;
        let pr = int(p, &BigInt::from(p).pow(r), prec);
        let xi1 = &y2 - &pr;
        let m: BigInt = kn - BigInt::from(k);
        if m.is_negative() {
            return Err(LimitError::InvalidParams("k_n is below k".into()));
        }
        let one_p = PadicScalar::from_int(p, 1 + p as i64, prec);
        let c = base(one_p.pow(k as i64 - 1)? - PadicScalar::one(p, prec));
        let xi2 = if m.is_zero() {
            base(PadicScalar::zero(p))
        } else {
            let vm = vp_int(p, &m).unwrap_or(0) as u32;
            let wide = PadicScalar::from_int(p, 1 + p as i64, prec + vm + 2);
            let step = wide.pow_big(&m)? - PadicScalar::one(p, prec + vm + 2);
            base(wide.pow(k as i64 - 1)?.mul_ref(&step))
        };
        let s2 = &c + &xi2;
        Ok(BlowupPoint { p, k, s1: y2, s2, xi1, xi2 })
    }

    /// `(s1 - p^r) xi2 - (s2 - ((1+p)^{k-1} - 1)) xi1`.
    pub fn incidence_residual(&self) -> Result<QuadExtScalar, LimitError> {
        let p = self.p;
        let prec = self.s1.a.precision().max(self.s2.a.precision()).max(1) + 4;
        let pr = int(p, &BigInt::from(p).pow(self.k - 2), prec);
        let one_p = PadicScalar::from_int(p, 1 + p as i64, prec);
        let c = base(one_p.pow(self.k as i64 - 1)? - PadicScalar::one(p, prec));
        Ok(&(&self.s1 - &pr).mul_ref(&self.xi2) - &(&self.s2 - &c).mul_ref(&self.xi1))
    }

    /// The projective pair scaled so one entry is 1. An exactly vanishing
    /// `xi2` (constant weight) gives the crystalline point `(1 : 0)`.
    pub fn normalized(&self) -> Result<(QuadExtScalar, QuadExtScalar), LimitError> {
        if is_exact_zero(&self.xi2) {
            return Ok((base(PadicScalar::one(self.p, 1)), self.xi2.clone()));
        }
        normalize_pair(&self.xi1, &self.xi2)
    }
}

pub fn blowup_coords_at(params: &SequenceParams, n: u32, prec: u32) -> Result<BlowupPoint, LimitError> {
    let (kn, an) = sequence_term(params, n)?;
    let y2 = y_squared(params.p, &kn, &an, prec)?;
    BlowupPoint::new(params.p, params.k, &kn, y2, prec)
}

/// The point of the `n`-th term at the working precision.
pub fn blowup_coords(params: &SequenceParams, n: u32) -> Result<BlowupPoint, LimitError> {
    blowup_coords_at(params, n, working_precision(params, n))
}

/// `(y_n^2 - p^r)/p^n`.
pub fn normalized_third(params: &SequenceParams, n: u32) -> Result<QuadExtScalar, LimitError> {
    Ok(shift(&blowup_coords(params, n)?.xi1, -(n as i64)))
}

/// `((1+p)^{k_n-1} - (1+p)^{k-1})/p^n`.
pub fn normalized_fourth(params: &SequenceParams, n: u32) -> Result<QuadExtScalar, LimitError> {
    Ok(shift(&blowup_coords(params, n)?.xi2, -(n as i64)))
}

/// `𝓛 p^r (p-1)`, or `2p^r` for `𝓛 = ∞`.
pub fn third_limit(params: &SequenceParams) -> QuadRational {
    let pr = QuadRational::int(params.p as i64).pow(params.r(), params.p);
    match &params.l {
        LValue::Finite(l) => l.mul(&pr, params.p).mul(&QuadRational::int(params.p as i64 - 1), params.p),
        LValue::Infinity => pr.mul(&QuadRational::int(2), params.p),
    }
}

/// `(1+p)^{k-1}(p-1) log(1+p)`, or `0` for `𝓛 = ∞`.
pub fn fourth_limit(params: &SequenceParams, prec: u32) -> Result<PadicScalar, LimitError> {
    let p = params.p;
    if params.l.is_infinite() {
        return Ok(PadicScalar::zero(p));
    }
    let one_p = PadicScalar::from_int(p, 1 + p as i64, prec);
    let c = one_p.pow(params.k as i64 - 1)?.mul_ref(&PadicScalar::from_int(p, p as i64 - 1, prec));
    Ok(c.mul_ref(&one_p.iwasawa_log()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LApprox {
    Finite(QuadExtScalar),
    Infinity,
}

/// `((1+p)^{r+1} log(1+p)/p^r) · xi1/xi2` at the `n`-th point; tends to `𝓛`.
pub fn approximate_l(params: &SequenceParams, n: u32) -> Result<LApprox, LimitError> {
    let p = params.p;
    let pt = blowup_coords(params, n)?;
    let (x1, x2) = pt.normalized()?;
    if x2.is_zero() {
        return Ok(LApprox::Infinity);
    }
    let prec = working_precision(params, n);
    let one_p = PadicScalar::from_int(p, 1 + p as i64, prec);
    let factor = one_p.pow(params.r() as i64 + 1)?.mul_ref(&one_p.iwasawa_log()?).shift(-(params.r() as i64));
    Ok(LApprox::Finite(x1.div(&x2)?.scale(&factor)))
}
