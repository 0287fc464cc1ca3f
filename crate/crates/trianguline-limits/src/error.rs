use padic_core::PadicError;
use series_core::SeriesError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point is not on the exceptional fiber")]
    NotOnFiber,
    #[error("both projective coordinates vanish")]
    DegeneratePoint,
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
