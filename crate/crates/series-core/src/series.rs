//! Laurent series in `T` over `Q_p`, stored on a window of degrees.
//!
//! Outside the window the coefficients are described by a valuation floor
//! on each side: `EXACT` (all zero), a finite bound, or `UNKNOWN`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

use padic_core::valuation::pow_p;
use padic_core::{PadicError, PadicScalar, EXACT};

use crate::error::SeriesError;
use crate::poly::{level_radius, ExactPoly};

/// Floor meaning "no information".
pub const UNKNOWN: i64 = i64::MIN;

/// Valuation floor of a product of two regions.
pub fn floor_mul(a: i64, b: i64) -> i64 {
    if a == EXACT || b == EXACT {
        EXACT
    } else if a == UNKNOWN || b == UNKNOWN {
        UNKNOWN
    } else {
        a.saturating_add(b)
    }
}

/// Valuation floor of a single coefficient.
pub fn floor_of(x: &PadicScalar) -> i64 {
    if x.is_exact_zero() {
        EXACT
    } else {
        x.valuation_lb()
    }
}

/// `x + O(p^floor)`.
fn blur(x: PadicScalar, floor: i64) -> PadicScalar {
    if floor == EXACT {
        x
    } else {
        x.add_ref(&PadicScalar::zero_mod(x.prime(), floor))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    p: u64,
    lo: i64,
    coeffs: Vec<PadicScalar>,
    below: i64,
    above: i64,
}

/// Coefficients brought to a common exponent: entry `i` is
/// `p^shift · ints[i]`, known modulo `p^cap`.
pub(crate) struct Fixed {
    pub shift: i64,
    pub cap: i64,
    pub ints: Vec<BigInt>,
}

impl Fixed {
    pub fn from_scalars(p: u64, c: &[PadicScalar]) -> Option<Fixed> {
        let live: Vec<&PadicScalar> = c.iter().filter(|x| !x.is_exact_zero()).collect();
        if live.is_empty() {
            return None;
        }
        let cap = live.iter().map(|x| x.abs_precision()).min().unwrap();
        let shift = live.iter().filter_map(|x| x.valuation()).min().unwrap_or(cap).min(cap);
        let width = (cap - shift) as u32;
        let modulus = pow_p(p, width);
        let ints = c
            .iter()
            .map(|x| match x.valuation() {
                Some(v) if v < cap => (x.unit() * pow_p(p, (v - shift) as u32)).mod_floor(&modulus),
                _ => BigInt::zero(),
            })
            .collect();
        Some(Fixed { shift, cap, ints })
    }

    pub fn width(&self) -> u32 {
        (self.cap - self.shift) as u32
    }

    pub fn into_scalars(self, p: u64) -> Vec<PadicScalar> {
        let w = self.width();
        self.ints
            .into_iter()
            .map(|s| if w == 0 { PadicScalar::zero_mod(p, self.cap) } else { PadicScalar::from_residue(p, self.shift, s, w) })
            .collect()
    }

    /// Replaces `f(x)` by `f(x + c)`.
    pub fn taylor_shift(&mut self, p: u64, c: i64) {
        let modulus = pow_p(p, self.width());
        let c = BigInt::from(c);
        let n = self.ints.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &self.ints[j + 1] * &c;
                self.ints[j] = (&self.ints[j] + t).mod_floor(&modulus);
            }
        }
    }
}

impl TruncatedSeries {
    /// Raw constructor. `coeffs[i]` is the coefficient of `T^{lo+i}`.
    pub fn new(p: u64, lo: i64, coeffs: Vec<PadicScalar>, below: i64, above: i64) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.prime() == p));
        TruncatedSeries { p, lo, coeffs, below, above }
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, 0, Vec::new(), EXACT, EXACT)
    }

    /// An exact polynomial, coefficients at `prec` relative digits.
    pub fn from_poly(p: u64, f: &ExactPoly, prec: u32) -> Self {
        let c = f.coeffs().iter().map(|q| PadicScalar::from_rational(p, q, prec)).collect();
        Self::new(p, 0, c, EXACT, EXACT)
    }

    /// A polynomial known only below degree `m`.
    pub fn from_poly_truncated(p: u64, f: &ExactPoly, prec: u32, m: usize) -> Self {
        let c = (0..m).map(|d| PadicScalar::from_rational(p, &f.coeff(d), prec)).collect();
        Self::new(p, 0, c, EXACT, UNKNOWN)
    }

    /// `c·T^d`, exact outside that degree.
    pub fn monomial(c: PadicScalar, d: i64) -> Self {
        let p = c.prime();
        Self::new(p, d, vec![c], EXACT, EXACT)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Lowest stored degree.
    pub fn min_degree(&self) -> i64 {
        self.lo
    }

    /// Number of stored coefficients.
    pub fn t_precision(&self) -> usize {
        self.coeffs.len()
    }

    /// One past the highest stored degree.
    pub fn end(&self) -> i64 {
        self.lo + self.coeffs.len() as i64
    }

    pub fn below_floor(&self) -> i64 {
        self.below
    }

    pub fn above_floor(&self) -> i64 {
        self.above
    }

    pub fn coeffs(&self) -> &[PadicScalar] {
        &self.coeffs
    }

    /// Coefficient of `T^d`; `None` when nothing is known about it.
    pub fn coeff(&self, d: i64) -> Option<PadicScalar> {
        if d < self.lo {
            return region(self.p, self.below);
        }
        if d >= self.end() {
            return region(self.p, self.above);
        }
        Some(self.coeffs[(d - self.lo) as usize].clone())
    }

    /// Valuation floor of the coefficient of `T^d`.
    pub fn floor_at(&self, d: i64) -> i64 {
        if d < self.lo {
            self.below
        } else if d >= self.end() {
            self.above
        } else {
            floor_of(&self.coeffs[(d - self.lo) as usize])
        }
    }

    /// Smallest valuation floor over all degrees.
    pub fn global_floor(&self) -> i64 {
        self.coeffs.iter().map(floor_of).fold(self.below.min(self.above), i64::min)
    }

    /// Keeps degrees below `hi`; higher coefficients become unknown.
    pub fn truncate(&self, hi: i64) -> Self {
        if hi >= self.end() {
            return self.clone();
        }
        let keep = (hi - self.lo).max(0) as usize;
        Self::new(self.p, self.lo, self.coeffs[..keep].to_vec(), self.below, UNKNOWN)
    }

    /// Keeps degrees below `hi`; the rest is summarized by its floor.
    pub fn truncate_bounded(&self, hi: i64) -> Self {
        if hi >= self.end() {
            return self.clone();
        }
        let keep = (hi - self.lo).max(0) as usize;
        let floor = self.coeffs[keep..].iter().map(floor_of).fold(self.above, i64::min);
        Self::new(self.p, self.lo, self.coeffs[..keep].to_vec(), self.below, floor)
    }

    /// Drops stored coefficients below `lo`, folding them into the floor.
    pub fn trim_below(&self, lo: i64) -> Self {
        if lo <= self.lo {
            return self.clone();
        }
        let cut = ((lo - self.lo) as usize).min(self.coeffs.len());
        let floor = self.coeffs[..cut].iter().map(floor_of).fold(self.below, i64::min);
        Self::new(self.p, lo, self.coeffs[cut..].to_vec(), floor, self.above)
    }

    /// Stores every degree from `lo` up, filling with the lower floor.
    pub fn extend_down(&self, lo: i64) -> Result<Self, SeriesError> {
        if lo >= self.lo {
            return Ok(self.clone());
        }
        let fill = region(self.p, self.below).ok_or(SeriesError::PrecisionExhausted)?;
        let mut c: Vec<PadicScalar> = (lo..self.lo).map(|_| fill.clone()).collect();
        c.extend(self.coeffs.iter().cloned());
        Ok(Self::new(self.p, lo, c, self.below, self.above))
    }

    /// `T^k · self`.
    pub fn shift_degree(&self, k: i64) -> Self {
        Self::new(self.p, self.lo + k, self.coeffs.clone(), self.below, self.above)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p, self.lo, self.coeffs.iter().map(|c| -c).collect(), self.below, self.above)
    }

    pub fn scale(&self, c: &PadicScalar) -> Self {
        let f = floor_of(c);
        Self::new(
            self.p,
            self.lo,
            self.coeffs.iter().map(|x| x * c).collect(),
            floor_mul(self.below, f),
            floor_mul(self.above, f),
        )
    }

    /// Every coefficient with at most `prec` absolute digits.
    pub fn with_cap(&self, cap: i64) -> Self {
        let c = self.coeffs.iter().map(|x| x.truncate(cap)).collect();
        Self::new(self.p, self.lo, c, self.below.min(cap), self.above.min(cap))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        let parts = [self, o];
        let lo = parts
            .iter()
            .filter(|s| s.below == UNKNOWN)
            .map(|s| s.lo)
            .max()
            .unwrap_or_else(|| self.lo.min(o.lo));
        let hi = parts
            .iter()
            .filter(|s| s.above == UNKNOWN)
            .map(|s| s.end())
            .min()
            .unwrap_or_else(|| self.end().max(o.end()));
        let mut c = Vec::new();
        for d in lo..hi.max(lo) {
            let mut acc = PadicScalar::zero(self.p);
            for s in parts {
                if d < s.lo {
                    acc = blur(acc, s.below);
                } else if d >= s.end() {
                    acc = blur(acc, s.above);
                } else {
                    acc = &acc + &s.coeffs[(d - s.lo) as usize];
                }
            }
            c.push(acc);
        }
        Self::new(self.p, lo, c, self.below.min(o.below), self.above.min(o.above))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Prefix and suffix minima of the floors over stored degrees.
    fn floor_scans(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.coeffs.len();
        let mut pre = Vec::with_capacity(n);
        let mut m = self.below;
        for c in &self.coeffs {
            m = m.min(floor_of(c));
            pre.push(m);
        }
        let mut suf = vec![0; n];
        let mut m = self.above;
        for i in (0..n).rev() {
            m = m.min(floor_of(&self.coeffs[i]));
            suf[i] = m;
        }
        (pre, suf)
    }

    /// Least floor over degrees `<= d`.
    fn pre_min(&self, pre: &[i64], d: i64) -> i64 {
        if d < self.lo {
            self.below
        } else if d >= self.end() {
            pre.last().copied().unwrap_or(self.below).min(self.above)
        } else {
            pre[(d - self.lo) as usize]
        }
    }

    /// Least floor over degrees `>= d`.
    fn suf_min(&self, suf: &[i64], d: i64) -> i64 {
        if d >= self.end() {
            self.above
        } else if d < self.lo {
            suf.first().copied().unwrap_or(self.above).min(self.below)
        } else {
            suf[(d - self.lo) as usize]
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        let p = self.p;
        let (fp, fs) = self.floor_scans();
        let (gp, gs) = o.floor_scans();
        let err = |d: i64| {
            let a = floor_mul(self.below, o.suf_min(&gs, d - self.lo + 1));
            let b = floor_mul(self.above, o.pre_min(&gp, d - self.end()));
            let c = floor_mul(o.below, self.suf_min(&fs, d - o.lo + 1));
            let e = floor_mul(o.above, self.pre_min(&fp, d - o.end()));
            a.min(b).min(c).min(e)
        };
        let lo0 = self.lo + o.lo;
        let hi0 = if self.coeffs.is_empty() || o.coeffs.is_empty() { lo0 } else { self.end() + o.end() - 1 };
        let mut start = lo0;
        while start < hi0 && err(start) == UNKNOWN {
            start += 1;
        }
        let mut c = Vec::new();
        let mut d = start;
        while d < hi0 {
            let e = err(d);
            if e == UNKNOWN {
                break;
            }
            let mut acc = PadicScalar::zero(p);
            let i0 = (d - o.end() + 1).max(self.lo);
            let i1 = (d - o.lo).min(self.end() - 1);
            for i in i0..=i1 {
                let x = &self.coeffs[(i - self.lo) as usize];
                let y = &o.coeffs[(d - i - o.lo) as usize];
                if x.is_exact_zero() || y.is_exact_zero() {
                    continue;
                }
                acc = &acc + &(x * y);
            }
            c.push(blur(acc, e));
            d += 1;
        }
        let gf = self.global_floor();
        let go = o.global_floor();
        let below = if start > lo0 { UNKNOWN } else { floor_mul(self.below, go).min(floor_mul(o.below, gf)) };
        let above = if d < hi0 { UNKNOWN } else { floor_mul(self.above, go).min(floor_mul(o.above, gf)) };
        Self::new(p, start, c, below, above)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(PadicScalar::one(self.p, self.max_relative_precision().max(1)), 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn max_relative_precision(&self) -> u32 {
        self.coeffs.iter().map(|c| c.precision()).max().unwrap_or(1)
    }

    /// Inverse of a power series with unit constant term, to the same
    /// number of terms.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        if self.lo != 0 || self.below != EXACT || self.coeffs.is_empty() {
            return Err(SeriesError::NotAUnit);
        }
        let c0 = &self.coeffs[0];
        if c0.valuation() != Some(0) {
            return Err(SeriesError::NotAUnit);
        }
        let inv0 = c0.inv()?;
        let m = self.coeffs.len();
        let mut g: Vec<PadicScalar> = Vec::with_capacity(m);
        g.push(inv0.clone());
        for n in 1..m {
            let mut acc = PadicScalar::zero(self.p);
            for i in 1..=n {
                let fi = &self.coeffs[i];
                if !fi.is_exact_zero() {
                    acc = &acc + &(fi * &g[n - i]);
                }
            }
            g.push(-&(&acc * &inv0));
        }
        // the inverse of an integral unit is integral
        let above = if self.above == EXACT && m == 1 {
            EXACT
        } else if self.global_floor() >= 0 {
            0
        } else {
            UNKNOWN
        };
        Ok(Self::new(self.p, 0, g, EXACT, above))
    }

    /// `res(f dt)`: the coefficient of `T^{-1}` in `f/(1+T)`.
    pub fn residue_dt(&self) -> Result<PadicScalar, SeriesError> {
        if self.below == UNKNOWN {
            return Err(SeriesError::PrecisionExhausted);
        }
        let mut acc = PadicScalar::zero(self.p);
        let mut d = -1i64;
        let mut sign = true;
        while d >= self.lo {
            if let Some(c) = self.coeff(d) {
                acc = if sign { &acc + &c } else { &acc - &c };
            } else {
                return Err(SeriesError::PrecisionExhausted);
            }
            d -= 1;
            sign = !sign;
        }
        Ok(blur(acc, self.below))
    }

    /// `inf_n v_p(a_n) + n·s` over the stored window (a lower bound for the
    /// true value when tails are present).
    pub fn radius_valuation_at(&self, s: Rational64) -> Option<Rational64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let f = floor_of(c);
                (f != EXACT).then(|| Rational64::from_integer(f) + s * (self.lo + i as i64))
            })
            .min()
    }

    pub fn radius_valuation(&self, l: u32) -> Option<Rational64> {
        self.radius_valuation_at(level_radius(self.p, l))
    }

    /// Equality of every jointly known coefficient, at the precision of both.
    pub fn eq_at_precision(&self, o: &Self) -> bool {
        let diff = self.sub(o);
        diff.coeffs.iter().all(|c| c.is_zero())
    }

    /// The stored non-negative part as a fixed-point vector, starting at
    /// degree 0.
    pub(crate) fn positive_fixed(&self) -> Option<Fixed> {
        let start = self.lo.max(0);
        if start >= self.end() {
            return None;
        }
        let mut c: Vec<PadicScalar> = (0..start).map(|_| PadicScalar::zero(self.p)).collect();
        c.extend(self.coeffs[(start - self.lo) as usize..].iter().cloned());
        Fixed::from_scalars(self.p, &c)
    }

    /// Stored coefficients at negative degrees, as `(k, c_k)` for `T^{-k}`,
    /// in increasing `k`.
    pub(crate) fn principal_part(&self) -> Vec<(i64, PadicScalar)> {
        (self.lo..self.end().min(0))
            .rev()
            .map(|d| (-d, self.coeffs[(d - self.lo) as usize].clone()))
            .filter(|(_, c)| !c.is_exact_zero())
            .collect()
    }

    /// Parses `deg:coef;...@end`.
    pub fn parse(s: &str, p: u64) -> Result<Self, SeriesError> {
        let bad = || SeriesError::Padic(PadicError::Parse(s.to_string()));
        let (body, end) = s.trim().rsplit_once('@').ok_or_else(bad)?;
        let end: i64 = end.parse().map_err(|_| bad())?;
        let mut terms: Vec<(i64, PadicScalar)> = Vec::new();
        for t in body.split(';').filter(|t| !t.is_empty()) {
            let (d, c) = t.split_once(':').ok_or_else(bad)?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            terms.push((d, padic_core::parse_scalar(c, p)?));
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap_or(0).min(end);
        let mut c: Vec<PadicScalar> = (lo..end).map(|_| PadicScalar::zero(p)).collect();
        for (d, x) in terms {
            if d >= end {
                return Err(bad());
            }
            c[(d - lo) as usize] = x;
        }
        Ok(Self::new(p, lo, c, EXACT, UNKNOWN))
    }
}

fn region(p: u64, floor: i64) -> Option<PadicScalar> {
    match floor {
        EXACT => Some(PadicScalar::zero(p)),
        UNKNOWN => None,
        f => Some(PadicScalar::zero_mod(p, f)),
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_exact_zero())
            .map(|(i, c)| format!("{}:{}", self.lo + i as i64, c))
            .collect();
        write!(f, "{}@{}", terms.join(";"), self.end())
    }
}
