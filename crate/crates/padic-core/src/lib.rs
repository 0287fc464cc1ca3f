//! Fixed-precision arithmetic in `Q_p`, its ramified quadratic extension
//! `Q_p(π)` with `π² = p`, and the residue fields `F_p`, `F_{p²}`.

pub mod error;
pub mod quad;
pub mod residue;
pub mod scalar;
pub mod text;
pub mod valuation;

pub use error::PadicError;
pub use quad::{QuadExtScalar, QuadRational};
pub use residue::ResidueElement;
pub use scalar::{PadicScalar, SqrtBranch, EXACT};
pub use text::{format_rational, parse_rational, parse_scalar, BaseText, ExtText};
pub use valuation::Valuation;
