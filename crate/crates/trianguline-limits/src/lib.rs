//! Sequences of crystalline parameters `(k_n, a_n)`, their points in the
//! blow-up chart, and the semi-stable point they converge to.

pub mod coords;
pub mod error;
pub mod fiber;
pub mod params;
pub mod psi;

pub use coords::{
    approximate_l, blowup_coords, blowup_coords_at, fourth_limit, normalized_fourth, normalized_third, third_limit, working_precision, y_root,
    y_squared, BlowupPoint, LApprox,
};
pub use error::LimitError;
pub use fiber::{l_invariant_formula, limit_point, limit_type, recover_semistable_parameter, tangent_vector, Direction, FiberPoint, LimitType};
pub use params::{sequence_term, LValue, SequenceParams};
pub use psi::{psi_relation_check, PsiCheck};
