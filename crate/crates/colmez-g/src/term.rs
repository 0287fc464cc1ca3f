//! Single terms `G_n` truncated at a product depth, their partial sums and
//! the congruences `G ≡ p^{-n} mod φ_n^{r+1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use series_core::{cyclotomic_phi, cyclotomic_phi_s, ExactPoly};

use crate::error::ColmezError;

/// Environment variable overriding [`DEFAULT_BUDGET_CAP`].
pub const BUDGET_ENV: &str = "ROBBA_BUDGET_CAP";

/// Largest degree bound a term may have before it is refused.
pub const DEFAULT_BUDGET_CAP: u64 = 20_000;

pub fn budget_cap() -> u64 {
    std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET_CAP)
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn inv_p_power(p: u64, n: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(p).pow(n))
}

/// Parameters of one term: prime, twist `r`, index `n` and the last factor
/// index `depth` kept in the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GTermSpec {
    pub p: u64,
    pub r: u32,
    pub n: u32,
    pub depth: u32,
}

impl GTermSpec {
    pub fn new(p: u64, r: u32, n: u32, depth: u32) -> Result<Self, ColmezError> {
        if !is_odd_prime(p) {
            return Err(ColmezError::InvalidParams(format!("p = {p} is not an odd prime")));
        }
        if r == 0 || n == 0 {
            return Err(ColmezError::InvalidParams("r and n must be positive".into()));
        }
        if depth < n {
            return Err(ColmezError::InvalidParams(format!("depth {depth} is below the term index {n}")));
        }
        Ok(GTermSpec { p, r, n, depth })
    }

    /// `(r+1)^2 Σ_{n≤i≤depth} p^{i-1}(p-1)`, saturating.
    pub fn degree_bound(&self) -> u64 {
        let sq = ((self.r as u64) + 1).pow(2);
        let mut s: u64 = 0;
        for i in self.n..=self.depth {
            let t = self.p.checked_pow(i - 1).and_then(|x| x.checked_mul(self.p - 1)).unwrap_or(u64::MAX);
            s = s.saturating_add(t);
        }
        s.saturating_mul(sq)
    }

    /// The term one index up with one more factor.
    pub fn shifted(&self) -> Self {
        GTermSpec { n: self.n + 1, depth: self.depth + 1, ..*self }
    }

    fn check_budget(&self, cap: u64) -> Result<(), ColmezError> {
        let needed = self.degree_bound();
        if needed > cap {
            return Err(ColmezError::BudgetExceeded { needed, cap });
        }
        Ok(())
    }
}

/// `(1 - x^{r+1})^{r+1}`.
fn bracket(x: &ExactPoly, r: u32) -> ExactPoly {
    ExactPoly::one().sub(&x.pow(r + 1)).pow(r + 1)
}

/// The term written in `S = 1 + T`, where every `φ_i` is sparse.
pub(crate) fn g_term_s(spec: &GTermSpec) -> ExactPoly {
    let p = spec.p;
    let inv_p = inv_p_power(p, 1);
    let lead = cyclotomic_phi_s(p, spec.n).scale(&inv_p);
    let mut acc = bracket(&lead, spec.r).scale(&inv_p_power(p, spec.n));
    for i in spec.n + 1..=spec.depth {
        let y = ExactPoly::one().sub(&cyclotomic_phi_s(p, i).scale(&inv_p));
        acc = acc.mul(&bracket(&y, spec.r));
    }
    acc
}

pub(crate) fn g_term_s_with_cap(spec: &GTermSpec, cap: u64) -> Result<ExactPoly, ColmezError> {
    spec.check_budget(cap)?;
    Ok(g_term_s(spec))
}

pub fn g_term_with_cap(spec: &GTermSpec, cap: u64) -> Result<ExactPoly, ColmezError> {
    Ok(g_term_s_with_cap(spec, cap)?.s_to_t())
}

/// `G_n` with the product cut after `φ_depth`, exact in `T`.
pub fn g_term(spec: &GTermSpec) -> Result<ExactPoly, ColmezError> {
    g_term_with_cap(spec, budget_cap())
}

pub fn g_partial_with_cap(p: u64, r: u32, n_max: u32, depth: u32, cap: u64) -> Result<ExactPoly, ColmezError> {
    if n_max == 0 {
        return Err(ColmezError::InvalidParams("n_max must be positive".into()));
    }
    let specs = (1..=n_max).map(|n| GTermSpec::new(p, r, n, depth)).collect::<Result<Vec<_>, _>>()?;
    for s in &specs {
        s.check_budget(cap)?;
    }
    let mut acc = ExactPoly::zero();
    for s in &specs {
        acc = acc.add(&g_term_s(s));
    }
    Ok(acc.s_to_t())
}

/// `Σ_{n≤n_max} G_n`, every term cut after `φ_depth`.
pub fn g_partial(p: u64, r: u32, n_max: u32, depth: u32) -> Result<ExactPoly, ColmezError> {
    g_partial_with_cap(p, r, n_max, depth, budget_cap())
}

/// `f((1+T)^p - 1)`.
pub fn frobenius_poly(f: &ExactPoly, p: u64) -> ExactPoly {
    f.t_to_s().spread(p as usize).s_to_t()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub holds: bool,
    /// Remainder of `G - p^{-n}` modulo `φ_n^{r+1}`, in `T`.
    pub remainder: ExactPoly,
}

/// Exact remainder of `g - p^{-n}` by `φ_n(T)^{r+1}`.
pub fn check_congruence(g: &ExactPoly, p: u64, r: u32, n: u32) -> Congruence {
    let m = cyclotomic_phi(p, n).pow(r + 1);
    let remainder = g.sub(&ExactPoly::constant(inv_p_power(p, n))).rem(&m);
    Congruence { holds: remainder.is_zero(), remainder }
}

/// The same test for the partial sum `Σ_{k≤n_max} G_k`, reducing each
/// factor modulo `φ_n^{r+1}` instead of expanding the product.
pub fn check_partial_congruence(p: u64, r: u32, n: u32, n_max: u32, depth: u32) -> Result<Congruence, ColmezError> {
    if n == 0 || n_max == 0 {
        return Err(ColmezError::InvalidParams("levels must be positive".into()));
    }
    GTermSpec::new(p, r, n_max, depth)?;
    let m = cyclotomic_phi_s(p, n).pow(r + 1);
    let inv_p = inv_p_power(p, 1);
    let one = ExactPoly::one();

    // φ_i mod m, from S^{p^{i-1}}
    let mut phis = Vec::with_capacity(depth as usize);
    for i in 1..=depth {
        let x = ExactPoly::x().pow_mod(p.pow(i - 1), &m);
        let mut sum = ExactPoly::zero();
        let mut pw = one.clone();
        for _ in 0..p {
            sum = sum.add(&pw);
            pw = pw.mul_mod(&x, &m);
        }
        phis.push(sum);
    }
    let bracket_mod = |y: &ExactPoly| one.sub(&y.pow_mod(r as u64 + 1, &m)).pow_mod(r as u64 + 1, &m);
    let tails: Vec<ExactPoly> = phis.iter().map(|f| bracket_mod(&one.sub(&f.scale(&inv_p)))).collect();

    let mut total = ExactPoly::zero();
    for k in 1..=n_max {
        let mut acc = bracket_mod(&phis[k as usize - 1].scale(&inv_p)).scale(&inv_p_power(p, k));
        for t in &tails[k as usize..] {
            acc = acc.mul_mod(t, &m);
        }
        total = total.add(&acc);
    }
    let remainder = total.sub(&ExactPoly::constant(inv_p_power(p, n))).rem(&m).s_to_t();
    Ok(Congruence { holds: remainder.is_zero(), remainder })
}
