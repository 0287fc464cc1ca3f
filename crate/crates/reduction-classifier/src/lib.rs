//! Semisimplified mod `p` reductions of `V_{k,𝓛}` for `3 ≤ k ≤ p + 1`,
//! driven by `ν = v_p(𝓛 - H_- - H_+)`.

pub mod crosscheck;
pub mod error;
pub mod full;
pub mod harmonic;
pub mod inertia;
pub mod record;
pub mod shape;
pub mod zigzag;

pub use crosscheck::{bm_crosscheck, bm_inertia_shape, gp_inertia_shape, gp_inertia_shape_nu, BmCheck};
pub use error::ClassifyError;
pub use full::{classify_full_small_weight, full_prime_bound, is_conditional, lambda1_weight5, lambda_weight4, residue_of, trace_weight3, trace_weight5};
pub use harmonic::{binomial, binomial_valuation, gp_shift, harmonic_shift, harmonic_sum, nu_invariant, v_plus_minus, BinomialValuation};
pub use inertia::{classify_inertia, classify_nu, inertia_rows, InertiaRow, Region};
pub use record::{classify, classify_record, table, ClassificationRecord, LambdaRecord, ShapeRecord};
pub use shape::{Lambda, ReductionShape, TracePair};
pub use zigzag::{regime_threshold, t_direct, tau_closed_form, tau_direct, zigzag_params, ZigzagParams};
