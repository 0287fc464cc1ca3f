//! Parameters `(p, k, 𝓛)` and the sequence `(k_n, a_n)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use padic_core::{ExtText, QuadRational};

use crate::error::LimitError;

/// A value of `𝓛` in `Q(π) ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LValue {
    Finite(QuadRational),
    Infinity,
}

impl LValue {
    pub fn rational(n: i64, d: i64) -> Self {
        LValue::Finite(QuadRational::rational(BigRational::new(n.into(), d.into())))
    }

    /// Accepts `n/d`, digit strings, `a+b*pi` and `inf`.
    pub fn parse(s: &str, p: u64) -> Result<Self, LimitError> {
        Ok(match ExtText::parse(s, p)?.to_quad() {
            Some(q) => LValue::Finite(q),
            None => LValue::Infinity,
        })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LValue::Infinity)
    }
}

impl fmt::Display for LValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LValue::Finite(q) => write!(f, "{q}"),
            LValue::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceParams {
    pub p: u64,
    pub k: u32,
    pub l: LValue,
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl SequenceParams {
    pub fn new(p: u64, k: u32, l: LValue) -> Result<Self, LimitError> {
        if !is_odd_prime(p) {
            return Err(LimitError::InvalidParams(format!("p = {p} is not an odd prime")));
        }
        if k < 3 {
            return Err(LimitError::InvalidParams(format!("weight {k} is below 3")));
        }
        Ok(SequenceParams { p, k, l })
    }

    /// `r = k - 2`.
    pub fn r(&self) -> u32 {
        self.k - 2
    }

    /// `p^{r/2}`, in `Q(π)` when `r` is odd.
    pub fn half_power(&self) -> QuadRational {
        QuadRational::pi_power(self.p, self.r() as i64)
    }
}

/// `(k + p^n(p-1), p^{r/2}(1 + 𝓛 p^n(p-1)/2))`, or for `𝓛 = ∞`
/// `(k + p^{n^2}(p-1), p^{r/2}(1 + p^n))`.
pub fn sequence_term(params: &SequenceParams, n: u32) -> Result<(BigInt, QuadRational), LimitError> {
    if n == 0 {
        return Err(LimitError::InvalidParams("n must be positive".into()));
    }
    let p = params.p;
    let pb = BigInt::from(p);
    let pm1 = BigInt::from(p - 1);
    let base = params.half_power();
    let one = QuadRational::one();
    match &params.l {
        LValue::Finite(l) => {
            let step = pb.pow(n) * &pm1;
            let kn = BigInt::from(params.k) + &step;
            let factor = one.add(&l.scale(&BigRational::new(step, BigInt::from(2))));
            Ok((kn, base.mul(&factor, p)))
        }
        LValue::Infinity => {
            let kn = BigInt::from(params.k) + pb.pow(n * n) * &pm1;
            let factor = one.add(&QuadRational::rational(BigRational::from_integer(pb.pow(n))));
            Ok((kn, base.mul(&factor, p)))
        }
    }
}
