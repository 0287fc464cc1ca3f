//! The `(k-1)`-fold table of reductions on inertia, indexed by `ν`.

use num_rational::Rational64;

use padic_core::Valuation;
use trianguline_limits::LValue;

use crate::error::ClassifyError;
use crate::harmonic::nu_invariant;
use crate::shape::ReductionShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Below(Rational64),
    Equal(Rational64),
    Between(Rational64, Rational64),
    AtLeast(Rational64),
    Above(Rational64),
}

impl Region {
    pub fn contains(&self, nu: Valuation) -> bool {
        let f = Valuation::Finite;
        match *self {
            Region::Below(x) => nu < f(x),
            Region::Equal(x) => nu == f(x),
            Region::Between(x, y) => f(x) < nu && nu < f(y),
            Region::AtLeast(x) => nu >= f(x),
            Region::Above(x) => nu > f(x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaRow {
    pub region: Region,
    pub shape: ReductionShape,
}

pub(crate) fn check_weight(p: u64, k: u32) -> Result<(), ClassifyError> {
    if k < 3 || k as u64 > p + 1 {
        return Err(ClassifyError::WeightOutOfRange { p, k });
    }
    Ok(())
}

/// Rows in increasing `ν`: an irreducible band `(m - r/2, m + 1 - r/2)`
/// after each reducible boundary `ν = m - r/2`, closed off at `ν = 1/2`
/// (odd `k`) or `ν = 0` (even `k`).
pub fn inertia_rows(p: u64, k: u32) -> Result<Vec<InertiaRow>, ClassifyError> {
    check_weight(p, k)?;
    let ki = k as i64;
    let half_r = Rational64::new(ki - 2, 2);
    let band = |m: i64| ReductionShape::irreducible(p, (ki - 1 - m) + p as i64 * m);
    let mut rows = vec![InertiaRow { region: Region::Below(Rational64::from_integer(1) - half_r), shape: band(0)? }];
    for m in 1.. {
        let b = Rational64::from_integer(m) - half_r;
        if k % 2 == 1 && b >= Rational64::new(1, 2) {
            let e = (ki - 1) / 2;
            rows.push(InertiaRow { region: Region::AtLeast(b), shape: ReductionShape::reducible(p, e, e) });
            break;
        }
        if k % 2 == 0 && b == Rational64::from_integer(0) {
            let h = ki / 2;
            rows.push(InertiaRow { region: Region::Equal(b), shape: ReductionShape::reducible(p, h, h - 1) });
            rows.push(InertiaRow { region: Region::Above(b), shape: ReductionShape::irreducible(p, h + p as i64 * (h - 1))? });
            break;
        }
        rows.push(InertiaRow { region: Region::Equal(b), shape: ReductionShape::reducible(p, ki - 1 - m, m) });
        rows.push(InertiaRow { region: Region::Between(b, b + 1), shape: band(m)? });
    }
    Ok(rows)
}

/// The row containing `ν`.
pub fn classify_nu(p: u64, k: u32, nu: Valuation) -> Result<ReductionShape, ClassifyError> {
    let rows = inertia_rows(p, k)?;
    let mut hits = rows.iter().filter(|row| row.region.contains(nu));
    let row = hits.next().expect("rows cover every valuation");
    debug_assert!(hits.next().is_none(), "rows overlap at {nu}");
    Ok(row.shape)
}

pub fn classify_inertia(p: u64, k: u32, l: &LValue) -> Result<ReductionShape, ClassifyError> {
    classify_nu(p, k, nu_invariant(p, k, l))
}
