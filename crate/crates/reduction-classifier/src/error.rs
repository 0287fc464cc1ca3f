use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("weight {k} outside the supported range for p = {p}")]
    WeightOutOfRange { p: u64, k: u32 },
    #[error("valuation regime does not match: {0}")]
    RegimeMismatch(String),
    #[error("argument {0} is odd")]
    OddArgument(u32),
    #[error("closed form for tau not reached at n = {n}")]
    RegimeNotReached { n: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}
