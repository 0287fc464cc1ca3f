//! Polynomials over `Q` with exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use padic_core::valuation::vp_rational;

/// Dense polynomial with rational coefficients, lowest degree first.
/// Trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Splits rational coefficients into integers over a common denominator.
fn clear_denominators(c: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for x in c {
        den = den.lcm(x.denom());
    }
    let ints = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (ints, den)
}

fn balanced_decode(c: BigInt, n: usize, k: u64, out: &mut Vec<BigInt>) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(c);
        return;
    }
    let m = n / 2;
    let width = k * m as u64;
    let modulus = BigInt::one() << width;
    let mut low = c.mod_floor(&modulus);
    if low >= (&modulus >> 1usize) {
        low -= &modulus;
    }
    let high = (c - &low) >> width;
    balanced_decode(low, m, k, out);
    balanced_decode(high, n - m, k, out);
}

/// Integer convolution by packing into one big integer.
fn int_convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    if a.len().min(b.len()) < 8 {
        let mut c = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        return c;
    }
    let ba = a.iter().map(|x| x.bits()).max().unwrap_or(0);
    let bb = b.iter().map(|x| x.bits()).max().unwrap_or(0);
    let lg = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    let k = ba + bb + lg + 2;
    let pack = |v: &[BigInt]| {
        let mut acc = BigInt::zero();
        for x in v.iter().rev() {
            acc <<= k;
            acc += x;
        }
        acc
    };
    let prod = pack(a) * pack(b);
    let mut out = Vec::with_capacity(n);
    balanced_decode(prod, n, k, &mut out);
    out
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_bigints(c: Vec<BigInt>) -> Self {
        Self::new(c.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut v = vec![BigRational::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        ExactPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (a, da) = clear_denominators(&self.coeffs);
        let (b, db) = clear_denominators(&o.coeffs);
        let den = da * db;
        Self::new(int_convolve(&a, &b).into_iter().map(|c| BigRational::new(c, den.clone())).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division over `Q`. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[i + j] -= &c * dj;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        let monic_int = d.leading().is_some_and(|c| c.is_one()) && d.coeffs.iter().all(|c| c.is_integer());
        if !monic_int {
            return self.div_rem(d).1;
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return self.clone();
        }
        let (mut a, den) = clear_denominators(&self.coeffs);
        let m: Vec<BigInt> = d.coeffs.iter().map(|c| c.to_integer()).collect();
        for i in (dd..a.len()).rev() {
            let c = std::mem::take(&mut a[i]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m[..dd].iter().enumerate() {
                if !mj.is_zero() {
                    a[i - dd + j] -= &c * mj;
                }
            }
        }
        a.truncate(dd);
        Self::new(a.into_iter().map(|x| BigRational::new(x, den.clone())).collect())
    }

    /// `self · o mod m`.
    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^e mod m` for a possibly large exponent.
    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        let mut acc = Self::one().rem(m);
        let mut base = self.rem(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `self(x + c)` for an integer `c`.
    pub fn taylor_shift(&self, c: i64) -> Self {
        let (mut a, den) = clear_denominators(&self.coeffs);
        let c = BigInt::from(c);
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * &c;
                a[j] += t;
            }
        }
        Self::new(a.into_iter().map(|x| BigRational::new(x, den.clone())).collect())
    }

    /// `self(x^k)`.
    pub fn spread(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// Rewrites a polynomial in `T` as one in `S = 1 + T`.
    pub fn t_to_s(&self) -> Self {
        self.taylor_shift(-1)
    }

    /// Rewrites a polynomial in `S = 1 + T` as one in `T`.
    pub fn s_to_t(&self) -> Self {
        self.taylor_shift(1)
    }

    /// Least `p`-adic valuation of a coefficient; `None` for zero.
    pub fn min_valuation(&self, p: u64) -> Option<i64> {
        self.coeffs.iter().filter_map(|c| vp_rational(p, c)).min()
    }

    /// `inf_n v_p(a_n) + n·s`; `None` for zero.
    pub fn radius_valuation_at(&self, p: u64, s: Rational64) -> Option<Rational64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(n, c)| vp_rational(p, c).map(|v| Rational64::from_integer(v) + s * n as i64))
            .min()
    }

    /// Valuation on the circle of radius `p^{-1/φ(p^l)}`.
    pub fn radius_valuation(&self, p: u64, l: u32) -> Option<Rational64> {
        self.radius_valuation_at(p, level_radius(p, l))
    }

    /// Largest absolute value of a numerator, for budget estimates.
    pub fn height_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.numer().abs().bits().max(c.denom().bits())).max().unwrap_or(0)
    }
}

/// `1/φ(p^l) = 1/(p^{l-1}(p-1))`.
pub fn level_radius(p: u64, l: u32) -> Rational64 {
    assert!(l >= 1);
    Rational64::new(1, (p as i64).pow(l - 1) * (p as i64 - 1))
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_matches_schoolbook() {
        let a: Vec<BigInt> = (0..40i64).map(|i| BigInt::from((i * 7919) % 1000 - 500) * BigInt::from(10u64).pow((i % 5) as u32)).collect();
        let b: Vec<BigInt> = (0..30i64).map(|i| BigInt::from((i * 104729) % 777 - 388)).collect();
        let fast = int_convolve(&a, &b);
        let mut slow = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                slow[i + j] += x * y;
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn division_reconstructs() {
        let f = ExactPoly::from_ints(&[3, -1, 4, 1, -5, 9]);
        let d = ExactPoly::new(vec![rat(2), BigRational::new(1.into(), 3.into()), rat(7)]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree().unwrap() < 2);
        let m = ExactPoly::from_ints(&[3, 3, 1]).pow(2);
        let g = ExactPoly::new(vec![BigRational::new(1.into(), 9.into()), rat(-4), rat(2), rat(0), rat(5), rat(1), rat(-7)]);
        assert_eq!(g.rem(&m), g.div_rem(&m).1);
    }

    #[test]
    fn shifts_invert() {
        let f = ExactPoly::from_ints(&[1, 2, 3, 4]);
        assert_eq!(f.t_to_s().s_to_t(), f);
        assert_eq!(f.taylor_shift(1), f.compose(&ExactPoly::from_ints(&[1, 1])));
    }
}
