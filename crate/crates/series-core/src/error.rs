use padic_core::PadicError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("constant term is not a unit")]
    NotAUnit,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
