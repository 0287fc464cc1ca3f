//! The polynomials `φ_n(T) = ((1+T)^{p^n} - 1)/((1+T)^{p^{n-1}} - 1)`.

use num_bigint::BigInt;
use num_traits::One;
use padic_core::PadicScalar;

use crate::poly::ExactPoly;
use crate::series::TruncatedSeries;

/// `φ_n` written in `S = 1 + T`: `Σ_{j<p} S^{j p^{n-1}}`.
pub fn cyclotomic_phi_s(p: u64, n: u32) -> ExactPoly {
    assert!(n >= 1, "level must be positive");
    let step = p.pow(n - 1) as usize;
    let mut c = vec![BigInt::from(0); step * (p as usize - 1) + 1];
    for j in 0..p as usize {
        c[j * step] = BigInt::one();
    }
    ExactPoly::from_bigints(c)
}

/// `φ_n(T)`, exact.
pub fn cyclotomic_phi(p: u64, n: u32) -> ExactPoly {
    cyclotomic_phi_s(p, n).s_to_t()
}

/// `φ_n(T)` as a series with coefficients at `prec` digits.
pub fn cyclotomic_phi_series(p: u64, n: u32, prec: u32) -> TruncatedSeries {
    TruncatedSeries::from_poly(p, &cyclotomic_phi(p, n), prec)
}

/// `φ_n(0) = p`, as a scalar.
pub fn phi_constant(p: u64, n: u32, prec: u32) -> PadicScalar {
    let c = cyclotomic_phi(p, n).coeff(0);
    PadicScalar::from_rational(p, &c, prec)
}
