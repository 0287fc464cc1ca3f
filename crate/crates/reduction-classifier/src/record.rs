//! JSON rows `{p, k, L, nu, shape, lambda?, conditional}`.

use serde::{Deserialize, Serialize};

use trianguline_limits::LValue;

use crate::error::ClassifyError;
use crate::full::{classify_full_small_weight, full_prime_bound, is_conditional};
use crate::harmonic::nu_invariant;
use crate::inertia::classify_inertia;
use crate::shape::{Lambda, ReductionShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ShapeRecord {
    Irreducible { c: u64 },
    ReducibleInertia { i: u64, j: u64 },
    ReducibleFull { i: u64, j: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum LambdaRecord {
    Value { value: String },
    Trace { trace: String, split: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub p: u64,
    pub k: u32,
    #[serde(rename = "L")]
    pub l: String,
    pub nu: String,
    pub shape: ShapeRecord,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<LambdaRecord>,
    pub conditional: bool,
}

impl ClassificationRecord {
    pub fn new(p: u64, k: u32, l: &LValue, shape: &ReductionShape) -> Self {
        let (shape_rec, lambda) = match *shape {
            ReductionShape::Irreducible { c } => (ShapeRecord::Irreducible { c }, None),
            ReductionShape::ReducibleInertia { i, j } => (ShapeRecord::ReducibleInertia { i, j }, None),
            ReductionShape::ReducibleFull { i, j, lambda } => {
                let lr = match lambda {
                    Lambda::Value(x) => LambdaRecord::Value { value: x.to_string() },
                    Lambda::Trace(t) => LambdaRecord::Trace { trace: t.trace.to_string(), split: t.split },
                };
                (ShapeRecord::ReducibleFull { i, j }, Some(lr))
            }
        };
        ClassificationRecord {
            p,
            k,
            l: l.to_string(),
            nu: nu_invariant(p, k, l).to_string(),
            shape: shape_rec,
            lambda,
            conditional: is_conditional(p, k, l),
        }
    }
}

/// The full description where one is available, else the inertia row.
pub fn classify(p: u64, k: u32, l: &LValue, full: bool) -> Result<ReductionShape, ClassifyError> {
    if full && full_prime_bound(k).is_some_and(|b| p >= b) {
        classify_full_small_weight(p, k, l)
    } else {
        classify_inertia(p, k, l)
    }
}

pub fn classify_record(p: u64, k: u32, l: &LValue, full: bool) -> Result<ClassificationRecord, ClassifyError> {
    Ok(ClassificationRecord::new(p, k, l, &classify(p, k, l, full)?))
}

/// One row per weight `3..=p+1` and per value, sorted by `(k, input order)`.
pub fn table(p: u64, values: &[LValue], full: bool) -> Result<Vec<ClassificationRecord>, ClassifyError> {
    let mut out = Vec::new();
    for k in 3..=(p + 1) as u32 {
        for l in values {
            out.push(classify_record(p, k, l, full)?);
        }
    }
    Ok(out)
}
