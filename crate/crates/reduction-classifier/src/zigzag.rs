//! The parameters `τ_n`, `t_n` of the sequence `(k_n, a_n)`.

use num_bigint::BigInt;
use num_rational::Rational64;

use padic_core::valuation::vp_int;
use padic_core::{QuadRational, Valuation};
use trianguline_limits::{sequence_term, LValue, SequenceParams};

use crate::error::ClassifyError;
use crate::harmonic::{binomial, nu_invariant, v_plus_minus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZigzagParams {
    pub tau: Valuation,
    pub t: u64,
    pub nu: Valuation,
}

fn sub_val(x: Valuation, y: Rational64) -> Valuation {
    match x {
        Valuation::Finite(v) => Valuation::Finite(v - y),
        other => other,
    }
}

/// `v_p((a_n^2 - C(k_n-2-v_-, v_+) C(k_n-2-v_+, v_-) p^r) / (p a_n))`.
pub fn tau_direct(p: u64, k: u32, l: &LValue, n: u32) -> Result<Valuation, ClassifyError> {
    let params = SequenceParams::new(p, k, l.clone()).map_err(|e| ClassifyError::InvalidParams(e.to_string()))?;
    let (kn, an) = sequence_term(&params, n).map_err(|e| ClassifyError::InvalidParams(e.to_string()))?;
    let (lo, hi) = v_plus_minus(k);
    let r = k - 2;
    let base: BigInt = &kn - 2;
    let c = binomial(&(&base - lo), hi) * binomial(&(&base - hi), lo) * BigInt::from(p).pow(r);
    let num = an.mul(&an, p).sub(&QuadRational::rational(c.into()));
    let va = an.valuation(p).finite().ok_or_else(|| ClassifyError::InvalidParams("a_n vanishes".into()))?;
    Ok(sub_val(num.valuation(p), va + 1))
}

/// `r/2 - 1 + n + ν`, with `ν` dropped for `𝓛 = ∞`.
pub fn tau_closed_form(p: u64, k: u32, l: &LValue, n: u32) -> Valuation {
    let base = Rational64::new(k as i64 - 2, 2) - 1 + n as i64;
    match nu_invariant(p, k, l) {
        Valuation::NegInf => Valuation::Finite(base),
        Valuation::Finite(v) => Valuation::Finite(base + v),
        Valuation::PosInf => Valuation::PosInf,
    }
}

/// `v_p(k_n - 2 - r)`.
pub fn t_direct(p: u64, k: u32, l: &LValue, n: u32) -> Result<u64, ClassifyError> {
    let params = SequenceParams::new(p, k, l.clone()).map_err(|e| ClassifyError::InvalidParams(e.to_string()))?;
    let (kn, _) = sequence_term(&params, n).map_err(|e| ClassifyError::InvalidParams(e.to_string()))?;
    Ok(vp_int(p, &(kn - BigInt::from(k))).expect("k_n differs from k"))
}

/// Direct `τ_n` and `t_n`; fails when `τ_n` still differs from the closed
/// form at this `n`.
pub fn zigzag_params(p: u64, k: u32, l: &LValue, n: u32) -> Result<ZigzagParams, ClassifyError> {
    let tau = tau_direct(p, k, l, n)?;
    if tau != tau_closed_form(p, k, l, n) {
        return Err(ClassifyError::RegimeNotReached { n });
    }
    Ok(ZigzagParams { tau, t: t_direct(p, k, l, n)?, nu: nu_invariant(p, k, l) })
}

/// Least `n_0 ≤ n_max` with the closed form holding on `n_0..=n_max`.
pub fn regime_threshold(p: u64, k: u32, l: &LValue, n_max: u32) -> Result<Option<u32>, ClassifyError> {
    let mut n0 = None;
    for n in (1..=n_max).rev() {
        if tau_direct(p, k, l, n)? != tau_closed_form(p, k, l, n) {
            break;
        }
        n0 = Some(n);
    }
    Ok(n0)
}
