use colmez_g::ColmezError;
use padic_core::PadicError;
use reduction_classifier::ClassifyError;
use thiserror::Error;
use trianguline_limits::LimitError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Colmez(#[from] ColmezError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

impl CliError {
    /// Bad input rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CliError::Usage(_)
                | CliError::Colmez(ColmezError::InvalidParams(_))
                | CliError::Limit(LimitError::InvalidParams(_))
                | CliError::Classify(ClassifyError::WeightOutOfRange { .. } | ClassifyError::OddArgument(_) | ClassifyError::InvalidParams(_))
        )
    }
}
