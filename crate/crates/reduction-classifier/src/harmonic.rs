//! Harmonic sums, the shift `H_- + H_+` and the invariant `ν`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use padic_core::valuation::vp_int;
use padic_core::{QuadRational, Valuation};
use trianguline_limits::LValue;

use crate::error::ClassifyError;

/// `H_l = 1 + 1/2 + ... + 1/l`, with `H_0 = 0`.
pub fn harmonic_sum(l: u32) -> BigRational {
    (1..=l).fold(BigRational::zero(), |acc, i| acc + BigRational::new(BigInt::one(), BigInt::from(i)))
}

/// The integers `v_- < (k-2)/2 < v_+` closest to `(k-2)/2`.
pub fn v_plus_minus(k: u32) -> (u32, u32) {
    assert!(k >= 3, "weight below 3");
    if k % 2 == 1 {
        ((k - 3) / 2, (k - 1) / 2)
    } else {
        (k / 2 - 2, k / 2)
    }
}

/// `H_{v_-} + H_{v_+}`.
pub fn harmonic_shift(k: u32) -> BigRational {
    let (lo, hi) = v_plus_minus(k);
    harmonic_sum(lo) + harmonic_sum(hi)
}

/// `H_{j/2} + H_{j/2-1}` for even `j ≥ 2`.
pub fn gp_shift(j: u32) -> Result<BigRational, ClassifyError> {
    if j % 2 == 1 || j < 2 {
        return Err(ClassifyError::OddArgument(j));
    }
    Ok(harmonic_sum(j / 2) + harmonic_sum(j / 2 - 1))
}

/// `v_p(𝓛 - H_- - H_+)`, exact; `-∞` for `𝓛 = ∞`.
pub fn nu_invariant(p: u64, k: u32, l: &LValue) -> Valuation {
    match l {
        LValue::Infinity => Valuation::NegInf,
        LValue::Finite(x) => x.sub(&QuadRational::rational(harmonic_shift(k))).valuation(p),
    }
}

/// `C(n, k)` for a possibly huge `n` and small `k`.
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num.div_floor(&den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomialValuation {
    pub computed: i64,
    pub formula: i64,
    pub equal: bool,
}

/// `v_p(C(c p^{i-1}, j))` against `i - 1 - v_p(j)`.
pub fn binomial_valuation(p: u64, c: u64, i: u32, j: u64) -> Result<BinomialValuation, ClassifyError> {
    let top = c * p.pow(i - 1);
    if c == 0 || c >= p || i == 0 || j == 0 || j > top {
        return Err(ClassifyError::InvalidParams(format!("c={c} i={i} j={j}")));
    }
    let b = binomial(&BigInt::from(top), j as u32);
    let computed = vp_int(p, &b).expect("binomial is nonzero") as i64;
    let formula = i as i64 - 1 - vp_int(p, &BigInt::from(j)).expect("j is nonzero") as i64;
    Ok(BinomialValuation { computed, formula, equal: computed == formula })
}
