//! The L-invariant `-log χ(γ) · λ/μ` of a class given by a pair `(a, b)`,
//! with `λ = res(a t^r dt)` and `μ = res(b t^r dt)`.

use std::fmt;

use padic_core::PadicScalar;
use series_core::{log_series_t, CharacterParams, TruncatedSeries};

use crate::error::ColmezError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub a: TruncatedSeries,
    pub b: TruncatedSeries,
    pub r: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LInvariant {
    Finite(PadicScalar),
    Infinity,
}

impl fmt::Display for LInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LInvariant::Finite(x) => write!(f, "{x}"),
            LInvariant::Infinity => write!(f, "inf"),
        }
    }
}

fn max_precision(f: &TruncatedSeries) -> u32 {
    f.coeffs().iter().map(|c| c.precision()).max().unwrap_or(1).max(1)
}

/// `res(f t^r dt)`.
fn residue_against_t(f: &TruncatedSeries, r: u32, prec: u32) -> Result<PadicScalar, ColmezError> {
    let p = f.prime();
    if r == 0 {
        return Ok(f.residue_dt()?);
    }
    // t^r T^{-r} is needed up to degree -1 - lo - r
    let need = (-f.min_degree() - 1 - r as i64).max(0) as usize + 1;
    let t = log_series_t(p, need + 1, prec);
    let tr = t.pow(r);
    Ok(f.mul(&tr).residue_dt()?)
}

impl Cocycle {
    pub fn new(a: TruncatedSeries, b: TruncatedSeries, r: u32) -> Result<Self, ColmezError> {
        if a.prime() != b.prime() {
            return Err(ColmezError::InvalidParams("entries over different primes".into()));
        }
        Ok(Cocycle { a, b, r })
    }

    pub fn prime(&self) -> u64 {
        self.a.prime()
    }

    pub fn scale(&self, c: &PadicScalar) -> Self {
        Cocycle { a: self.a.scale(c), b: self.b.scale(c), r: self.r }
    }

    /// `(res(a t^r dt), res(b t^r dt))`.
    pub fn residues(&self) -> Result<(PadicScalar, PadicScalar), ColmezError> {
        let prec = max_precision(&self.a).max(max_precision(&self.b)) + 2;
        Ok((residue_against_t(&self.a, self.r, prec)?, residue_against_t(&self.b, self.r, prec)?))
    }
}

/// `-log χ(γ) · λ/μ`, infinite when only `μ` vanishes.
pub fn benois_l_invariant(c: &Cocycle, params: &CharacterParams) -> Result<LInvariant, ColmezError> {
    if params.p != c.prime() {
        return Err(ColmezError::InvalidParams("character and cocycle use different primes".into()));
    }
    let (lambda, mu) = c.residues()?;
    if mu.is_zero() {
        if lambda.is_zero() {
            return Err(ColmezError::IndeterminateClass);
        }
        return Ok(LInvariant::Infinity);
    }
    let prec = lambda.precision().max(mu.precision()).max(1) + 2;
    let log_chi = params.log_chi(prec);
    Ok(LInvariant::Finite(-&log_chi.mul_ref(&lambda).div(&mu)?))
}
