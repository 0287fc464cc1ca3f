//! Truncated Laurent series over `Q_p`, exact rational polynomials, and the
//! Frobenius `T ↦ (1+T)^p - 1` and Gamma `T ↦ (1+T)^χ - 1` substitutions.

pub mod actions;
pub mod cyclo;
pub mod error;
pub mod poly;
pub mod series;

pub use actions::{
    binomial_series, frobenius_apply, gamma_apply, log_series_t, t_over_t, teichmuller, CharacterParams,
};
pub use cyclo::{cyclotomic_phi, cyclotomic_phi_s, cyclotomic_phi_series};
pub use error::SeriesError;
pub use poly::{level_radius, ExactPoly};
pub use series::{floor_mul, floor_of, TruncatedSeries, UNKNOWN};
