//! Reductions on the full Galois group for `k ∈ {3, 4, 5}`.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};


use padic_core::{QuadRational, ResidueElement, Valuation};
use trianguline_limits::LValue;

use crate::error::ClassifyError;
use crate::harmonic::{harmonic_shift, nu_invariant};
use crate::inertia::{check_weight, classify_nu};
use crate::shape::{Lambda, ReductionShape, TracePair};

/// Least prime for which the full description at weight `k` is available.
pub fn full_prime_bound(k: u32) -> Option<u64> {
    match k {
        3 => Some(3),
        4 | 5 => Some(5),
        _ => None,
    }
}

fn rational_residue(p: u64, x: &BigRational) -> ResidueElement {
    let pb = BigInt::from(p);
    let n = (x.numer() % &pb + &pb) % &pb;
    let d = (x.denom() % &pb + &pb) % &pb;
    let n = ResidueElement::new(p, i64::try_from(n).expect("reduced mod p"));
    let d = ResidueElement::new(p, i64::try_from(d).expect("reduced mod p"));
    n.mul(&d.inv().expect("denominator prime to p"))
}

/// Image in `F_p` of an element of `Z_p[π]`; `π` maps to 0.
pub fn residue_of(p: u64, x: &QuadRational) -> Result<ResidueElement, ClassifyError> {
    if x.valuation(p) < Valuation::int(0) {
        return Err(ClassifyError::RegimeMismatch(format!("{x} is not integral")));
    }
    Ok(rational_residue(p, &x.a))
}

fn finite(l: &LValue) -> Result<&QuadRational, ClassifyError> {
    match l {
        LValue::Finite(x) => Ok(x),
        LValue::Infinity => Err(ClassifyError::RegimeMismatch("L is infinite".into())),
    }
}

fn shifted(k: u32, l: &LValue) -> Result<QuadRational, ClassifyError> {
    Ok(finite(l)?.sub(&QuadRational::rational(harmonic_shift(k))))
}

fn unit_residue(p: u64, x: &QuadRational, what: &str) -> Result<ResidueElement, ClassifyError> {
    if x.valuation(p) != Valuation::int(0) {
        return Err(ClassifyError::RegimeMismatch(format!("{what} = {x} is not a unit")));
    }
    residue_of(p, x)
}

/// `k = 4`: `λ = -2(𝓛 - 3/2)` mod `p`.
pub fn lambda_weight4(p: u64, l: &LValue) -> Result<ResidueElement, ClassifyError> {
    let x = shifted(4, l)?.mul(&QuadRational::int(-2), p);
    unit_residue(p, &x, "lambda")
}

/// `k = 5`, `ν = -1/2`: `λ_1 = -3π(𝓛 - 5/2)` mod `p`.
pub fn lambda1_weight5(p: u64, l: &LValue) -> Result<ResidueElement, ClassifyError> {
    let x = shifted(5, l)?.mul(&QuadRational::pi_power(p, 1), p).mul(&QuadRational::int(-3), p);
    unit_residue(p, &x, "lambda_1")
}

/// `k = 3`, `ν ≥ 1/2`: `λ + 1/λ = -π^{-1}(𝓛 - 1)` mod `p`.
pub fn trace_weight3(p: u64, l: &LValue) -> Result<TracePair, ClassifyError> {
    let x = shifted(3, l)?.mul(&QuadRational::pi_power(p, -1), p).neg();
    Ok(TracePair::new(residue_of(p, &x)?))
}

/// `k = 5`, `ν ≥ 1/2`: `λ_2 + 1/λ_2 = 2π^{-1}(𝓛 - 5/2)` mod `p`.
pub fn trace_weight5(p: u64, l: &LValue) -> Result<TracePair, ClassifyError> {
    let x = shifted(5, l)?.mul(&QuadRational::pi_power(p, -1), p).mul(&QuadRational::int(2), p);
    Ok(TracePair::new(residue_of(p, &x)?))
}

pub fn classify_full_small_weight(p: u64, k: u32, l: &LValue) -> Result<ReductionShape, ClassifyError> {
    check_weight(p, k)?;
    match full_prime_bound(k) {
        Some(b) if p >= b => {}
        _ => return Err(ClassifyError::WeightOutOfRange { p, k }),
    }
    let nu = nu_invariant(p, k, l);
    let half = Valuation::Finite(Rational64::new(1, 2));
    let shape = match k {
        3 if nu >= half => ReductionShape::reducible_full(p, 1, 1, Lambda::Trace(trace_weight3(p, l)?)),
        4 if nu == Valuation::int(0) => ReductionShape::reducible_full(p, 2, 1, Lambda::Value(lambda_weight4(p, l)?)),
        5 if nu == Valuation::Finite(Rational64::new(-1, 2)) => ReductionShape::reducible_full(p, 3, 1, Lambda::Value(lambda1_weight5(p, l)?)),
        5 if nu >= half => ReductionShape::reducible_full(p, 2, 2, Lambda::Trace(trace_weight5(p, l)?)),
        _ => {
            let s = classify_nu(p, k, nu)?;
            debug_assert!(s.is_irreducible());
            s
        }
    };
    Ok(shape)
}

/// Whether the inertia description rests on the zig-zag conjecture.
pub fn is_conditional(p: u64, k: u32, l: &LValue) -> bool {
    let proved = full_prime_bound(k).is_some_and(|b| p >= b);
    !(l.is_infinite() || proved)
}

