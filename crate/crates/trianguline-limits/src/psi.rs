//! The telescoping relation `(1 - s·φ) y = s(1+T)` for
//! `y = s Σ_{n≤M} s^n (1+T)^{p^n}`, up to the omitted tail.

use num_bigint::BigInt;
use num_traits::Zero;

use padic_core::{PadicScalar, EXACT};
use series_core::{frobenius_apply, TruncatedSeries};

use crate::error::LimitError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiCheck {
    pub holds: bool,
    /// Least valuation over the residual coefficients below `t_prec`.
    pub bound: i64,
    /// `(M+2) v(s)`.
    pub required: i64,
}

/// Checks that `y - s·φ(y) - s(1+T)` has every coefficient below degree
/// `t_prec` of valuation at least `(M+2) v(s)`.
pub fn psi_relation_check(p: u64, s: &PadicScalar, m: u32, t_prec: usize) -> Result<PsiCheck, LimitError> {
    let v = match s.valuation() {
        Some(v) if v > 0 => v,
        _ => return Err(LimitError::InvalidParams("s must have positive valuation".into())),
    };
    let top = p.checked_pow(m).ok_or_else(|| LimitError::InvalidParams("tail too long".into()))? as usize;
    let len = (top + 1).min(t_prec);
    let prec = s.precision();
    let mut coeffs: Vec<PadicScalar> = (0..len).map(|_| PadicScalar::zero(p)).collect();
    let mut sp = s.clone();
    for n in 0..=m {
        let e = p.pow(n) as usize;
        let mut c = BigInt::from(1);
        for (i, slot) in coeffs.iter_mut().enumerate().take(e.min(len - 1) + 1) {
            if !c.is_zero() {
                *slot = &*slot + &sp.mul_ref(&PadicScalar::from_bigint(p, &c, prec + 2));
            }
            c = c * (e - i) / (i + 1);
        }
        sp = sp.mul_ref(s);
    }
    let above = if top < t_prec { EXACT } else { v };
    let y = TruncatedSeries::new(p, 0, coeffs, EXACT, above);
    let one_plus_t = TruncatedSeries::new(p, 0, vec![s.clone(), s.clone()], EXACT, EXACT);
    // degree d of φ(y) only sees degrees ≤ d of y, so the cut tail drops out
    let residual = y.sub(&frobenius_apply(&y)?.scale(s)).sub(&one_plus_t);
    let bound = (0..t_prec as i64)
        .filter_map(|d| residual.coeff(d))
        .map(|c| c.valuation_lb())
        .min()
        .unwrap_or(EXACT);
    let required = (m as i64 + 2) * v;
    Ok(PsiCheck { holds: bound >= required, bound, required })
}
