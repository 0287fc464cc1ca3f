use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("not a square modulo p")]
    NonResidue,
    #[error("odd valuation: no square root in this field")]
    OddValuation,
    #[error("not a principal unit")]
    NotPrincipalUnit,
    #[error("negative valuation")]
    NegativeValuation,
    #[error("argument is zero")]
    ZeroArgument,
    #[error("cannot parse `{0}`")]
    Parse(String),
}
