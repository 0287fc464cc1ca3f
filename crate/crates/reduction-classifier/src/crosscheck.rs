//! Independent encodings of the even-weight (via `a`) and odd-weight (via
//! the shift `a(k-1)`) parameterizations.

use num_rational::{BigRational, Rational64};

use padic_core::{QuadRational, Valuation};
use trianguline_limits::LValue;

use crate::error::ClassifyError;
use crate::harmonic::{gp_shift, harmonic_sum, nu_invariant};
use crate::inertia::check_weight;
use crate::shape::ReductionShape;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmCheck {
    /// `None` for `𝓛 = ∞`.
    pub a: Option<QuadRational>,
    pub v_a: Valuation,
    pub nu: Valuation,
    pub equal: bool,
}

fn check_even(p: u64, k: u32) -> Result<(), ClassifyError> {
    check_weight(p, k)?;
    if k % 2 == 1 || k < 4 {
        return Err(ClassifyError::WeightOutOfRange { p, k });
    }
    Ok(())
}

/// `a = (-1)^{k/2}(-1 + (k/2)(k/2 - 1)(-𝓛 + 2H_{k/2-1}))` and `v_p(a)`
/// against `ν`.
pub fn bm_crosscheck(p: u64, k: u32, l: &LValue) -> Result<BmCheck, ClassifyError> {
    check_even(p, k)?;
    let nu = nu_invariant(p, k, l);
    let LValue::Finite(x) = l else {
        return Ok(BmCheck { a: None, v_a: Valuation::NegInf, nu, equal: nu == Valuation::NegInf });
    };
    let h = (k / 2) as i64;
    let two_h = QuadRational::rational(harmonic_sum(k / 2 - 1) * BigRational::from_integer(2.into()));
    let inner = two_h.sub(x).mul(&QuadRational::int(h * (h - 1)), p).sub(&QuadRational::one());
    let a = if h % 2 == 0 { inner } else { inner.neg() };
    let v_a = a.valuation(p);
    Ok(BmCheck { a: Some(a), v_a, nu, equal: v_a == nu })
}

/// The even-weight reduction on inertia read off from `ν = v_p(a)`.
pub fn bm_inertia_shape(p: u64, k: u32, nu: Valuation) -> Result<ReductionShape, ClassifyError> {
    check_even(p, k)?;
    let h = (k / 2) as i64;
    let pi = p as i64;
    let zero = Valuation::int(0);
    if nu > zero {
        return ReductionShape::irreducible(p, h + pi * (h - 1));
    }
    if nu == zero {
        return Ok(ReductionShape::reducible(p, h, h - 1));
    }
    let Valuation::Finite(v) = nu else {
        return ReductionShape::irreducible(p, k as i64 - 1);
    };
    if v < Rational64::from_integer(2 - h) {
        return ReductionShape::irreducible(p, k as i64 - 1);
    }
    if v.is_integer() {
        let v = v.to_integer();
        return Ok(ReductionShape::reducible(p, h - v, h + v - 1));
    }
    let f = v.floor().to_integer();
    ReductionShape::irreducible(p, h - f + pi * (h + f - 1))
}

/// The odd-weight reduction on inertia from `v_p(𝓛 - a(k-1))`.
pub fn gp_inertia_shape(p: u64, k: u32, l: &LValue) -> Result<ReductionShape, ClassifyError> {
    check_weight(p, k)?;
    if k % 2 == 0 {
        return Err(ClassifyError::WeightOutOfRange { p, k });
    }
    let nu = match l {
        LValue::Infinity => Valuation::NegInf,
        LValue::Finite(x) => x.sub(&QuadRational::rational(gp_shift(k - 1)?)).valuation(p),
    };
    gp_inertia_shape_nu(p, k, nu)
}

pub fn gp_inertia_shape_nu(p: u64, k: u32, nu: Valuation) -> Result<ReductionShape, ClassifyError> {
    let ki = k as i64;
    let pi = p as i64;
    let f = |n: i64, d: i64| Valuation::Finite(Rational64::new(n, d));
    if nu < f(4 - ki, 2) {
        return ReductionShape::irreducible(p, ki - 1);
    }
    if nu >= f(1, 2) {
        return Ok(ReductionShape::reducible(p, (ki - 1) / 2, (ki - 1) / 2));
    }
    for l in 0..=(ki - 5) / 2 {
        let e = -l + (ki - 3) / 2;
        if nu == f(-1 - 2 * l, 2) {
            return Ok(ReductionShape::reducible(p, ki - 1 - e, e));
        }
        if f(-1 - 2 * l, 2) < nu && nu < f(1 - 2 * l, 2) {
            return ReductionShape::irreducible(p, (ki - 1) + (pi - 1) * e);
        }
    }
    Err(ClassifyError::RegimeMismatch(format!("no row for nu = {nu}")))
}
