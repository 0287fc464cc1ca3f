//! Shapes of semisimplified reductions.

use std::fmt;

use padic_core::residue::is_square_mod;
use padic_core::ResidueElement;

use crate::error::ClassifyError;

/// `λ + 1/λ` and whether `λ` lies in `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TracePair {
    pub trace: ResidueElement,
    pub split: bool,
}

impl TracePair {
    pub fn new(trace: ResidueElement) -> Self {
        let p = trace.prime();
        let t = trace.as_fp().expect("trace lies in F_p");
        let disc = (t * t + 4 * (p - 1)) % p;
        TracePair { trace, split: disc == 0 || is_square_mod(disc, p) }
    }

    /// The roots of `X^2 - trace X + 1`, in `F_p` or `F_{p^2}`.
    pub fn roots(&self) -> (ResidueElement, ResidueElement) {
        let p = self.trace.prime();
        let t = self.trace.as_fp().expect("trace lies in F_p");
        let disc = (t * t + 4 * (p - 1)) % p;
        let s = ResidueElement::sqrt_fp(p, disc);
        let half = ResidueElement::new(p, 2).inv().expect("p is odd");
        (self.trace.add(&s).mul(&half), self.trace.sub(&s).mul(&half))
    }
}

/// The unramified twist data of a reducible reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lambda {
    Value(ResidueElement),
    Trace(TracePair),
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Value(x) => write!(f, "{x}"),
            Lambda::Trace(t) => write!(f, "trace {}", t.trace),
        }
    }
}

/// `ind(ω₂^c)`, `ω^i ⊕ ω^j` on inertia, or `μ_λ ω^i ⊕ μ_{1/λ} ω^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionShape {
    Irreducible { c: u64 },
    ReducibleInertia { i: u64, j: u64 },
    ReducibleFull { i: u64, j: u64, lambda: Lambda },
}

impl ReductionShape {
    /// `ind(ω₂^c)` stored as `min(c, pc)` mod `p^2 - 1`.
    pub fn irreducible(p: u64, c: i64) -> Result<Self, ClassifyError> {
        let m = (p * p - 1) as i64;
        let c = c.rem_euclid(m) as u64;
        if c % (p + 1) == 0 {
            return Err(ClassifyError::InvalidParams(format!("p+1 divides {c}")));
        }
        Ok(ReductionShape::Irreducible { c: c.min(c * p % m as u64) })
    }

    /// Exponents reduced mod `p - 1`, larger first.
    pub fn reducible(p: u64, i: i64, j: i64) -> Self {
        let m = p as i64 - 1;
        let (i, j) = (i.rem_euclid(m) as u64, j.rem_euclid(m) as u64);
        ReductionShape::ReducibleInertia { i: i.max(j), j: i.min(j) }
    }

    /// Exponents reduced mod `p - 1`, in the order `λ` refers to.
    pub fn reducible_full(p: u64, i: i64, j: i64, lambda: Lambda) -> Self {
        let m = p as i64 - 1;
        ReductionShape::ReducibleFull { i: i.rem_euclid(m) as u64, j: j.rem_euclid(m) as u64, lambda }
    }

    /// Restriction to inertia.
    pub fn inertia(&self, p: u64) -> Self {
        match *self {
            ReductionShape::ReducibleFull { i, j, .. } => Self::reducible(p, i as i64, j as i64),
            other => other,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self, ReductionShape::Irreducible { .. })
    }

    /// `det = ω^{k-1}`.
    pub fn determinant_ok(&self, p: u64, k: u32) -> bool {
        let m = p - 1;
        let want = (k as u64 - 1) % m;
        match *self {
            ReductionShape::Irreducible { c } => c % m == want,
            ReductionShape::ReducibleInertia { i, j } | ReductionShape::ReducibleFull { i, j, .. } => (i + j) % m == want,
        }
    }
}

impl fmt::Display for ReductionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionShape::Irreducible { c } => write!(f, "ind(omega2^{c})"),
            ReductionShape::ReducibleInertia { i, j } => write!(f, "omega^{i} + omega^{j}"),
            ReductionShape::ReducibleFull { i, j, lambda } => write!(f, "mu(l) omega^{i} + mu(1/l) omega^{j}, l = {lambda}"),
        }
    }
}
