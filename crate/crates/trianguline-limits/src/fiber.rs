//! Points on the exceptional fiber over `x^r χ`, with the second
//! projective coordinate measured in units of `log(1+p)`.

use num_bigint::BigInt;

use padic_core::{PadicScalar, QuadExtScalar, QuadRational};

use crate::coords::{normalize_pair, BlowupPoint};
use crate::error::LimitError;
use crate::params::{LValue, SequenceParams};

/// The fiber direction `(a : b·log(1+p))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    pub a: QuadRational,
    pub b: QuadRational,
}

impl Direction {
    pub fn new(a: QuadRational, b: QuadRational) -> Result<Self, LimitError> {
        if a.is_zero() && b.is_zero() {
            return Err(LimitError::DegeneratePoint);
        }
        Ok(Direction { a, b })
    }

    /// `(a/b : 1)`, or `(1 : 0)`.
    pub fn normalized(&self, p: u64) -> Self {
        match self.b.inv(p) {
            Some(bi) => Direction { a: self.a.mul(&bi, p), b: QuadRational::one() },
            None => Direction { a: QuadRational::one(), b: QuadRational::zero() },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitType {
    Crystalline,
    SemistableNoncrystalline,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPoint {
    pub p: u64,
    pub r: u32,
    pub s1: QuadRational,
    pub s2: QuadRational,
    pub dir: Direction,
}

fn centre(p: u64, r: u32) -> (QuadRational, QuadRational) {
    let pb = BigInt::from(p);
    let s1 = QuadRational::rational(pb.pow(r).into());
    let s2 = QuadRational::rational((BigInt::from(p + 1).pow(r + 1) - BigInt::from(1)).into());
    (s1, s2)
}

impl FiberPoint {
    /// The point `(p^r, (1+p)^{r+1} - 1, dir)`.
    pub fn new(p: u64, r: u32, dir: Direction) -> Self {
        let (s1, s2) = centre(p, r);
        FiberPoint { p, r, s1, s2, dir }
    }

    pub fn with_coords(p: u64, r: u32, s1: QuadRational, s2: QuadRational, dir: Direction) -> Result<Self, LimitError> {
        let pt = FiberPoint { p, r, s1, s2, dir };
        pt.check(p, r)?;
        Ok(pt)
    }

    fn check(&self, p: u64, r: u32) -> Result<(), LimitError> {
        if self.p != p || self.r != r || (self.s1.clone(), self.s2.clone()) != centre(p, r) {
            return Err(LimitError::NotOnFiber);
        }
        if self.dir.a.is_zero() && self.dir.b.is_zero() {
            return Err(LimitError::DegeneratePoint);
        }
        Ok(())
    }

    /// Numerical coordinates, with `log(1+p)` expanded.
    pub fn to_blowup(&self, prec: u32) -> Result<BlowupPoint, LimitError> {
        let p = self.p;
        let log = PadicScalar::from_int(p, 1 + p as i64, prec).iwasawa_log()?;
        Ok(BlowupPoint {
            p,
            k: self.r + 2,
            s1: self.s1.to_scalar(p, prec),
            s2: self.s2.to_scalar(p, prec),
            xi1: self.dir.a.to_scalar(p, prec),
            xi2: self.dir.b.to_scalar(p, prec).scale(&log),
        })
    }

    /// The numerical projective pair, normalized as for sequence points.
    pub fn numeric_direction(&self, prec: u32) -> Result<(QuadExtScalar, QuadExtScalar), LimitError> {
        let b = self.to_blowup(prec)?;
        if self.dir.b.is_zero() {
            return Ok((QuadExtScalar::from_base(PadicScalar::one(self.p, prec)), b.xi2));
        }
        normalize_pair(&b.xi1, &b.xi2)
    }
}

/// `(p^r, (1+p)^{k-1} - 1, 𝓛p^r(p-1) : (1+p)^{k-1}(p-1) log(1+p))`, or
/// the crystalline point `(1 : 0)` for `𝓛 = ∞`.
pub fn limit_point(params: &SequenceParams) -> FiberPoint {
    let p = params.p;
    let r = params.r();
    let dir = match &params.l {
        LValue::Finite(l) => {
            let pm1 = QuadRational::int(p as i64 - 1);
            let a = l.mul(&QuadRational::int(p as i64).pow(r, p), p).mul(&pm1, p);
            let b = QuadRational::int(p as i64 + 1).pow(r + 1, p).mul(&pm1, p);
            Direction { a, b }
        }
        LValue::Infinity => Direction { a: QuadRational::one(), b: QuadRational::zero() },
    };
    FiberPoint::new(p, r, dir)
}

/// `-((1+p)^{r+1} log(1+p)/p^r) · a/b`; the logarithm cancels against the
/// unit of the second coordinate.
pub fn l_invariant_formula(p: u64, r: u32, point: &FiberPoint) -> Result<LValue, LimitError> {
    point.check(p, r)?;
    let Some(bi) = point.dir.b.inv(p) else {
        return Ok(LValue::Infinity);
    };
    let c = QuadRational::int(p as i64 + 1).pow(r + 1, p).mul(&QuadRational::pi_power(p, -2 * r as i64), p);
    Ok(LValue::Finite(c.mul(&point.dir.a, p).mul(&bi, p).neg()))
}

/// Minus the L-invariant of the limit point; equals the input `𝓛`.
pub fn recover_semistable_parameter(params: &SequenceParams) -> Result<LValue, LimitError> {
    Ok(match l_invariant_formula(params.p, params.r(), &limit_point(params))? {
        LValue::Finite(x) => LValue::Finite(x.neg()),
        LValue::Infinity => LValue::Infinity,
    })
}

/// The tangent functional pair `(a, b)`, up to a common scalar.
pub fn tangent_vector(point: &FiberPoint) -> Result<Direction, LimitError> {
    point.check(point.p, point.r)?;
    Ok(point.dir.normalized(point.p))
}

pub fn limit_type(point: &FiberPoint) -> Result<LimitType, LimitError> {
    point.check(point.p, point.r)?;
    Ok(if point.dir.b.is_zero() { LimitType::Crystalline } else { LimitType::SemistableNoncrystalline })
}
