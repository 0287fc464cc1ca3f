//! Residues of `t^{-1} F dt`. On the annulus of level `l` the zeros of `t`
//! enclosed are the points `ζ - 1`, `ζ ∈ μ_{p^l}`, each with residue one,
//! so for a polynomial `F` the residue is `Σ_ζ F(ζ - 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use padic_core::{PadicScalar, EXACT};
use series_core::{t_over_t, CharacterParams, ExactPoly, SeriesError, TruncatedSeries, UNKNOWN};

use crate::error::ColmezError;
use crate::term::{budget_cap, g_term, g_term_s_with_cap, GTermSpec};

/// `p^l Σ_{p^l | m} [S^m] f` for `f` written in `S = 1 + T`.
fn trace_s(fs: &ExactPoly, p: u64, level: u32) -> BigRational {
    let q = p.pow(level) as usize;
    let mut acc = BigRational::zero();
    for (m, c) in fs.coeffs().iter().enumerate().step_by(q) {
        debug_assert_eq!(m % q, 0);
        acc += c;
    }
    acc * BigRational::from_integer(BigInt::from(q))
}

/// `Σ_{ζ∈μ_{p^l}} f(ζ - 1)`, exact.
pub fn annulus_residue(f: &ExactPoly, p: u64, level: u32) -> BigRational {
    trace_s(&f.t_to_s(), p, level)
}

/// `res(t^{-1} f dt)` from the expansion at `T = 0`, with
/// `t^{-1} = T^{-1}(t/T)^{-1}` known below degree `m`.
pub fn residue_over_t(f: &TruncatedSeries, m: usize, prec: u32) -> Result<PadicScalar, ColmezError> {
    let inv = t_over_t(f.prime(), m, prec).invert_unit()?.shift_degree(-1);
    Ok(f.mul(&inv).residue_dt()?)
}

/// `Σ_{ζ∈μ_{p^l}} (ζ-1)^k` for `k < len`, as integers.
fn root_power_sums(p: u64, level: u32, len: usize) -> Vec<BigInt> {
    let q = p.pow(level) as usize;
    let mut out = Vec::with_capacity(len);
    let mut row = vec![BigInt::from(1)];
    for k in 0..len {
        let mut s = BigInt::zero();
        for j in (0..=k).step_by(q) {
            if (k - j) % 2 == 0 {
                s += &row[j];
            } else {
                s -= &row[j];
            }
        }
        out.push(s * q);
        let mut next = vec![BigInt::from(1); k + 2];
        for j in 1..=k {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    out
}

/// `Σ_{ζ∈μ_{p^l}} f(ζ - 1)` for a power series, coefficient by coefficient.
/// Unstored degrees `d ≥ end` contribute at valuation at least
/// `above + ceil(d/φ(p^l))`.
pub fn trace_functional(f: &TruncatedSeries, level: u32) -> Result<PadicScalar, ColmezError> {
    let p = f.prime();
    let lo = f.min_degree();
    if f.below_floor() != EXACT && lo <= 0 {
        return Err(SeriesError::PrecisionExhausted.into());
    }
    let end = f.end().max(0);
    let sums = root_power_sums(p, level, end as usize);
    let mut acc = PadicScalar::zero(p);
    for d in lo..end {
        let c = f.coeff(d).ok_or(SeriesError::PrecisionExhausted)?;
        if c.is_exact_zero() {
            continue;
        }
        if d < 0 {
            return Err(ColmezError::InvalidParams("the trace needs a power series".into()));
        }
        let tau = &sums[d as usize];
        if tau.is_zero() {
            continue;
        }
        let tau = PadicScalar::from_bigint(p, tau, c.precision().max(1) + 1);
        acc = &acc + &(&c * &tau);
    }
    let b = f.below_floor();
    if b != EXACT && lo > 0 {
        acc = acc.add_ref(&PadicScalar::zero_mod(p, b));
    }
    match f.above_floor() {
        EXACT => {}
        UNKNOWN => return Err(SeriesError::PrecisionExhausted.into()),
        a => {
            let phi = (p.pow(level - 1) * (p - 1)) as i64;
            acc = acc.add_ref(&PadicScalar::zero_mod(p, a.saturating_add(Integer::div_ceil(&end, &phi))));
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1PhiReport {
    /// The residue, known to `certified` absolute digits.
    pub value: PadicScalar,
    /// The residue of the truncated product, exactly.
    pub exact: BigRational,
    /// Digits guaranteed against the omitted factors `i > depth`.
    pub certified: i64,
}

/// `-res(t^{-1} G_1 dt)` on the level-one annulus, with the product in
/// `G_1` cut after `φ_depth`.
pub fn residue_c1_phi(p: u64, r: u32, depth: u32, prec: u32) -> Result<C1PhiReport, ColmezError> {
    let spec = GTermSpec::new(p, r, 1, depth)?;
    let g1 = g_term_s_with_cap(&spec, budget_cap())?;
    let exact = -trace_s(&g1, p, 1);
    // each omitted factor is 1 + O(p^{(r+1)(i-2)+}) on the circle
    let certified = (r as i64 + 1) * (depth as i64 - 1);
    let value = PadicScalar::from_rational(p, &exact, prec).truncate(certified);
    let certified = certified.min(value.abs_precision());
    Ok(C1PhiReport { value, exact, certified })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResidue {
    pub value: PadicScalar,
    /// Absolute digits to which `value` is known.
    pub certified: i64,
}

impl GammaResidue {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// `res(t^{-1}(γ - 1) f dt)` on the annulus of the given level, with `γ`
/// applied below degree `m` at `prec` digits.
pub fn gamma_difference_residue(
    f: &TruncatedSeries,
    params: &CharacterParams,
    m: usize,
    prec: u32,
    level: u32,
) -> Result<GammaResidue, ColmezError> {
    if params.p != f.prime() {
        return Err(ColmezError::InvalidParams("character and series use different primes".into()));
    }
    let moved = params.apply(f, m, prec)?;
    let value = trace_functional(&moved.sub(f), level)?;
    let certified = value.abs_precision();
    Ok(GammaResidue { value, certified })
}

/// `res(t^{-1}(γ - 1) G_n dt)` on the level-one annulus.
pub fn residue_c1_gamma(
    p: u64,
    r: u32,
    n: u32,
    depth: u32,
    m: usize,
    prec: u32,
    params: &CharacterParams,
) -> Result<GammaResidue, ColmezError> {
    let g = g_term(&GTermSpec::new(p, r, n, depth)?)?;
    let f = TruncatedSeries::from_poly(p, &g, prec);
    gamma_difference_residue(&f, params, m, prec, 1)
}
