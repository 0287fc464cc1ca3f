//! The series `G = Σ_n G_n` built from cyclotomic factors, its exact
//! congruences, the two residues used in the change of basis, and the
//! L-invariant of a cocycle.

pub mod error;
pub mod linv;
pub mod residue;
pub mod term;

pub use error::ColmezError;
pub use linv::{benois_l_invariant, Cocycle, LInvariant};
pub use residue::{
    annulus_residue, gamma_difference_residue, residue_c1_gamma, residue_c1_phi, residue_over_t, trace_functional, C1PhiReport,
    GammaResidue,
};
pub use term::{
    budget_cap, check_congruence, check_partial_congruence, frobenius_poly, g_partial, g_partial_with_cap, g_term, g_term_with_cap,
    Congruence, GTermSpec, BUDGET_ENV, DEFAULT_BUDGET_CAP,
};
