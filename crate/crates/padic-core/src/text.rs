//! Text forms: `p^<v>*<d0,d1,...>@<N>`, `<num>/<den>`, `<base>+<base>*pi`,
//! `inf`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::PadicError;
use crate::quad::{QuadExtScalar, QuadRational};
use crate::scalar::PadicScalar;

fn bad(s: &str) -> PadicError {
    PadicError::Parse(s.to_string())
}

/// Parses the digit form. `0` is the exact zero (prime unknown, so the
/// caller's prime is used).
pub fn parse_scalar(s: &str, p: u64) -> Result<PadicScalar, PadicError> {
    let s = s.trim();
    if s == "0" {
        return Ok(PadicScalar::zero(p));
    }
    let (head, n) = s.rsplit_once('@').ok_or_else(|| bad(s))?;
    let (pv, digits) = head.split_once('*').ok_or_else(|| bad(s))?;
    let (ps, vs) = pv.split_once('^').ok_or_else(|| bad(s))?;
    let prime: u64 = ps.parse().map_err(|_| bad(s))?;
    if prime != p {
        return Err(bad(s));
    }
    let val: i64 = vs.parse().map_err(|_| bad(s))?;
    let n: u32 = n.parse().map_err(|_| bad(s))?;
    if digits.is_empty() {
        if n != 0 {
            return Err(bad(s));
        }
        return Ok(PadicScalar::zero_mod(p, val));
    }
    let ds: Vec<u64> = digits.split(',').map(|d| d.parse::<u64>()).collect::<Result<_, _>>().map_err(|_| bad(s))?;
    if ds.len() != n as usize || n == 0 || ds.iter().any(|&d| d >= p) {
        return Err(bad(s));
    }
    let mut unit = BigInt::zero();
    for &d in ds.iter().rev() {
        unit = unit * p + d;
    }
    Ok(PadicScalar::from_residue(p, val, unit, n))
}

/// `<num>/<den>` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational, PadicError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| bad(s))?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad(s))?;
    if d.is_zero() {
        return Err(bad(s));
    }
    Ok(BigRational::new(n, d))
}

/// A base-field value given either exactly or by digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseText {
    Rational(BigRational),
    Digits(PadicScalar),
}

impl BaseText {
    pub fn parse(s: &str, p: u64) -> Result<Self, PadicError> {
        if s.contains('@') {
            parse_scalar(s, p).map(BaseText::Digits)
        } else {
            parse_rational(s).map(BaseText::Rational)
        }
    }

    /// Exact rational value; digits become the rational they spell.
    pub fn to_rational(&self) -> BigRational {
        match self {
            BaseText::Rational(q) => q.clone(),
            BaseText::Digits(x) => x.to_rational(),
        }
    }
}

/// A parameter in `Q_p(π) ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtText {
    Infinity,
    Value(BaseText, Option<BaseText>),
}

/// Splits `a+b*pi` at the `+` that starts the `π` term.
fn split_pi(s: &str) -> Option<(&str, &str)> {
    let body = s.strip_suffix("pi")?;
    if let Some(b) = body.strip_suffix('*') {
        // the coefficient of pi runs back to the last '+' outside a digit list
        let cut = b.rfind('+')?;
        return Some((&b[..cut], &b[cut + 1..]));
    }
    let cut = body.strip_suffix('+')?;
    Some((cut, "1"))
}

impl ExtText {
    pub fn parse(s: &str, p: u64) -> Result<Self, PadicError> {
        let s = s.trim();
        if s == "inf" {
            return Ok(ExtText::Infinity);
        }
        if s == "pi" {
            return Ok(ExtText::Value(BaseText::Rational(BigRational::zero()), Some(BaseText::Rational(BigRational::one()))));
        }
        if let Some((a, b)) = split_pi(s) {
            let a = if a.is_empty() { BaseText::Rational(BigRational::zero()) } else { BaseText::parse(a, p)? };
            return Ok(ExtText::Value(a, Some(BaseText::parse(b, p)?)));
        }
        Ok(ExtText::Value(BaseText::parse(s, p)?, None))
    }

    /// Exact value, `None` for infinity.
    pub fn to_quad(&self) -> Option<QuadRational> {
        match self {
            ExtText::Infinity => None,
            ExtText::Value(a, b) => Some(QuadRational::new(
                a.to_rational(),
                b.as_ref().map(|b| b.to_rational()).unwrap_or_else(BigRational::zero),
            )),
        }
    }
}

/// Rational text, `n` or `n/d`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Extension scalar text `a+b*pi`.
pub fn format_quad(x: &QuadExtScalar) -> String {
    x.to_string()
}
