//! The substitutions `φ: T ↦ (1+T)^p - 1` and `γ: T ↦ (1+T)^χ - 1`, the
//! series `t = log(1+T)` and the cyclotomic character data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use padic_core::valuation::pow_p;
use padic_core::{PadicScalar, EXACT};

use crate::error::SeriesError;
use crate::series::{floor_mul, floor_of, TruncatedSeries, UNKNOWN};

fn binom_row(p: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 1..=p {
        let next = &row[j as usize - 1] * BigInt::from(p - j + 1) / BigInt::from(j);
        row.push(next);
    }
    row
}

/// `1/(1 + Σ_{j=1}^{p-1} C(p,j) U^j)` to `U^depth`; the coefficient of `U^e`
/// has valuation at least `ceil(e/(p-1))`.
fn outer_unit_inverse(p: u64, depth: usize) -> Vec<BigInt> {
    let row = binom_row(p);
    let mut w = vec![BigInt::one()];
    for e in 1..=depth {
        let mut acc = BigInt::zero();
        for j in 1..=e.min(p as usize - 1) {
            acc -= &row[j] * &w[e - j];
        }
        w.push(acc);
    }
    w
}

fn truncated_int_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            c[i + j] += x * y;
        }
    }
    c
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// `f((1+T)^p - 1)`.
///
/// Negative powers use the expansion valid on annuli near the boundary:
/// `((1+T)^p - 1)^{-k} = T^{-kp} (1 + h(1/T))^{-k}`, cut where the omitted
/// coefficients drop below the precision of the input.
pub fn frobenius_apply(f: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let p = f.prime();
    let f = if f.min_degree() > 0 { f.extend_down(0)? } else { f.clone() };
    let end = f.end();
    if end <= 0 && f.above_floor() == UNKNOWN {
        return Err(SeriesError::PrecisionExhausted);
    }

    let pos = match f.positive_fixed() {
        Some(mut fx) => {
            fx.taylor_shift(p, -1);
            let n = fx.ints.len();
            let mut spread = vec![BigInt::zero(); (n - 1) * p as usize + 1];
            for (i, x) in fx.ints.drain(..).enumerate() {
                spread[i * p as usize] = x;
            }
            fx.ints = spread;
            fx.taylor_shift(p, 1);
            let full = TruncatedSeries::new(p, 0, fx.into_scalars(p), EXACT, EXACT);
            match f.above_floor() {
                EXACT => full,
                a => {
                    let t = full.truncate_bounded(end);
                    TruncatedSeries::new(p, 0, t.coeffs().to_vec(), EXACT, t.above_floor().min(a))
                }
            }
        }
        None => TruncatedSeries::new(p, 0, Vec::new(), EXACT, f.above_floor()),
    };

    let principal = f.principal_part();
    let kmax = (-f.min_degree()).max(0);
    let pi = p as i64;
    let depth = principal
        .iter()
        .map(|(k, c)| {
            let rel = c.abs_precision() - floor_of(c);
            ((pi - 1) * rel - 1 - (kmax - k) * pi).max(0)
        })
        .max()
        .unwrap_or(0);
    let lo = -kmax * pi - depth;
    let top = -pi;
    let mut neg: Vec<PadicScalar> = if kmax > 0 { (lo..=top).map(|_| PadicScalar::zero(p)).collect() } else { Vec::new() };
    let mut tail = EXACT;
    if kmax > 0 {
        let dmax = (depth + (kmax - 1) * pi) as usize;
        let w = outer_unit_inverse(p, dmax);
        let mut wk = vec![BigInt::one()];
        let mut k_done = 0i64;
        for (k, c) in &principal {
            while k_done < *k {
                wk = truncated_int_mul(&wk, &w, dmax + 1);
                k_done += 1;
            }
            let dk = (depth + (kmax - k) * pi) as usize;
            for e in 0..=dk {
                if wk[e].is_zero() {
                    continue;
                }
                let deg = -k * pi - e as i64;
                let idx = (deg - lo) as usize;
                let term = c * &PadicScalar::from_bigint(p, &wk[e], c.precision().max(1));
                neg[idx] = &neg[idx] + &term;
            }
            tail = tail.min(floor_mul(floor_of(c), ceil_div(dk as i64 + 1, pi - 1)));
        }
    }
    let mut negs = if kmax > 0 {
        TruncatedSeries::new(p, lo, neg, tail, EXACT)
    } else {
        TruncatedSeries::new(p, -pi + 1, Vec::new(), EXACT, EXACT)
    };
    // terms beyond the stored principal part land at degrees <= -(kmax+1)p
    let b = f.below_floor();
    if b != EXACT {
        let cut = -(kmax + 1) * pi;
        if b == UNKNOWN {
            negs = negs.trim_below(cut + 1);
            negs = TruncatedSeries::new(p, negs.min_degree(), negs.coeffs().to_vec(), UNKNOWN, negs.above_floor());
        } else {
            let lo2 = negs.min_degree();
            let c: Vec<PadicScalar> = negs
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, x)| if lo2 + i as i64 <= cut { x.add_ref(&PadicScalar::zero_mod(p, b)) } else { x.clone() })
                .collect();
            negs = TruncatedSeries::new(p, lo2, c, negs.below_floor().min(b), negs.above_floor());
        }
    }
    Ok(pos.add(&negs))
}

/// `C(c, i)` for `i < len`, by the falling-factorial recursion.
pub fn binomial_series(c: &PadicScalar, len: usize) -> Result<Vec<PadicScalar>, SeriesError> {
    let p = c.prime();
    let prec = c.precision().max(1) + 4;
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return Ok(out);
    }
    let mut cur = PadicScalar::one(p, prec);
    out.push(cur.clone());
    for i in 1..len {
        let k = PadicScalar::from_int(p, i as i64 - 1, prec);
        let step = c - &k;
        cur = cur.mul_ref(&step).div(&PadicScalar::from_int(p, i as i64, prec))?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// `f((1+T)^c - 1)` for a unit `c`, known below degree `m`.
pub fn gamma_apply(f: &TruncatedSeries, c: &PadicScalar, m: usize) -> Result<TruncatedSeries, SeriesError> {
    let p = f.prime();
    if c.valuation() != Some(0) {
        return Err(SeriesError::InvalidParams("exponent must be a p-adic unit".into()));
    }
    let f = if f.min_degree() > 0 { f.extend_down(0)? } else { f.clone() };
    let a = f.above_floor();
    let m = if a == UNKNOWN { m.min(f.end().max(0) as usize) } else { m };

    let mut pos: Vec<PadicScalar> = (0..m).map(|_| PadicScalar::zero(p)).collect();
    let mut above = if a == UNKNOWN { UNKNOWN } else { a };
    if let Some(mut fx) = f.positive_fixed() {
        fx.taylor_shift(p, -1);
        let w = fx.width();
        for (j, q) in fx.ints.iter().enumerate() {
            if w == 0 || q.is_zero() {
                continue;
            }
            let qs = PadicScalar::from_residue(p, fx.shift, q.clone(), w);
            let e = c.mul_ref(&PadicScalar::from_int(p, j as i64, c.precision().max(1)));
            let b = if j == 0 { vec![PadicScalar::one(p, w.max(1))] } else { binomial_series(&e, m)? };
            for (i, bi) in b.iter().enumerate().take(m) {
                pos[i] = &pos[i] + &(&qs * bi);
            }
        }
        // a constant stays put; anything else spreads over every degree
        let moving = fx.ints.len() > 1;
        for (i, x) in pos.iter_mut().enumerate() {
            if i == 0 || moving {
                *x = x.add_ref(&PadicScalar::zero_mod(p, fx.cap));
            }
        }
        if above != UNKNOWN && moving {
            above = above.min(fx.shift);
        }
    }
    let mut out = TruncatedSeries::new(p, 0, pos, EXACT, above);

    let principal = f.principal_part();
    if !principal.is_empty() {
        let kmax = principal.iter().map(|t| t.0).max().unwrap();
        let b = binomial_series(c, m + kmax as usize + 1)?;
        let w = TruncatedSeries::new(p, 0, b[1..].to_vec(), EXACT, 0);
        let winv = w.invert_unit()?;
        let mut pw = TruncatedSeries::monomial(PadicScalar::one(p, c.precision().max(1)), 0);
        let mut k_done = 0;
        for (k, ck) in &principal {
            while k_done < *k {
                pw = pw.mul(&winv).truncate(m as i64 + kmax);
                k_done += 1;
            }
            let term = pw.shift_degree(-k).scale(ck).truncate(m as i64);
            out = out.add(&term);
        }
    }
    let bf = f.below_floor();
    if bf != EXACT {
        let c: Vec<PadicScalar> = out
            .coeffs()
            .iter()
            .map(|x| if bf == UNKNOWN { x.clone() } else { x.add_ref(&PadicScalar::zero_mod(p, bf)) })
            .collect();
        if bf == UNKNOWN {
            return Err(SeriesError::PrecisionExhausted);
        }
        out = TruncatedSeries::new(p, out.min_degree(), c, bf, out.above_floor().min(bf));
    }
    Ok(out)
}

/// `t = log(1+T) = Σ_{i≥1} (-1)^{i+1} T^i / i`, known below degree `m+1`.
pub fn log_series_t(p: u64, m: usize, prec: u32) -> TruncatedSeries {
    let mut c = vec![PadicScalar::zero(p)];
    for i in 1..=m as i64 {
        let q = num_rational::BigRational::new(BigInt::from(if i % 2 == 1 { 1 } else { -1 }), BigInt::from(i));
        c.push(PadicScalar::from_rational(p, &q, prec));
    }
    TruncatedSeries::new(p, 0, c, EXACT, UNKNOWN)
}

/// `t/T`, known below degree `m`.
pub fn t_over_t(p: u64, m: usize, prec: u32) -> TruncatedSeries {
    let t = log_series_t(p, m, prec);
    TruncatedSeries::new(p, 0, t.coeffs()[1..].to_vec(), EXACT, UNKNOWN)
}

/// Teichmüller lift of `r mod p`.
pub fn teichmuller(p: u64, r: u64, prec: u32) -> PadicScalar {
    let modulus = pow_p(p, prec);
    let mut x = BigInt::from(r % p);
    for _ in 0..prec {
        x = x.modpow(&BigInt::from(p), &modulus);
    }
    PadicScalar::from_bigint(p, &x, prec)
}

/// Least primitive root mod `p`.
pub fn primitive_root(p: u64) -> u64 {
    let n = p - 1;
    let mut factors = Vec::new();
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| BigInt::from(g).modpow(&BigInt::from(n / q), &BigInt::from(p)) != BigInt::one()))
        .unwrap_or(1)
}

/// `χ(γ) = ζ^a (1+p)` with `ζ` the Teichmüller lift of the least
/// primitive root; the tame part is carried by its exponent `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterParams {
    pub p: u64,
    pub a: u64,
}

impl CharacterParams {
    pub fn new(p: u64, a: u64) -> Result<Self, SeriesError> {
        if p < 3 || p % 2 == 0 {
            return Err(SeriesError::InvalidParams(format!("p = {p} must be an odd prime")));
        }
        if a.gcd(&(p - 1)) != 1 {
            return Err(SeriesError::InvalidParams(format!("a = {a} is not prime to p - 1")));
        }
        Ok(CharacterParams { p, a })
    }

    pub fn standard(p: u64) -> Self {
        CharacterParams { p, a: 1 }
    }

    /// Exponent of the tame root, reduced mod `p - 1`.
    pub fn tame_exponent(&self) -> u64 {
        self.a % (self.p - 1)
    }

    /// `ζ^a` as a scalar, for substitutions only.
    pub fn tame_root(&self, prec: u32) -> PadicScalar {
        let g = primitive_root(self.p);
        let r = BigInt::from(g).modpow(&BigInt::from(self.a), &BigInt::from(self.p));
        teichmuller(self.p, r.try_into().unwrap_or(1), prec)
    }

    pub fn principal(&self, prec: u32) -> PadicScalar {
        PadicScalar::from_int(self.p, 1 + self.p as i64, prec)
    }

    pub fn chi(&self, prec: u32) -> PadicScalar {
        self.tame_root(prec).mul_ref(&self.principal(prec))
    }

    /// `log χ(γ) = log(1+p)`; the tame root contributes nothing.
    pub fn log_chi(&self, prec: u32) -> PadicScalar {
        self.principal(prec).iwasawa_log().expect("1+p is a unit")
    }

    pub fn apply(&self, f: &TruncatedSeries, m: usize, prec: u32) -> Result<TruncatedSeries, SeriesError> {
        gamma_apply(f, &self.chi(prec), m)
    }
}
