use padic_core::PadicError;
use series_core::SeriesError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColmezError {
    #[error("degree bound {needed} exceeds the budget cap {cap}")]
    BudgetExceeded { needed: u64, cap: u64 },
    #[error("both residues vanish within precision")]
    IndeterminateClass,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
