use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QSeriesError {
    #[error("leading coefficient is not invertible")]
    NotInvertible,
    #[error("valid order fell below one term")]
    OrderUnderflow,
    #[error("series has a non-zero constant term")]
    NonZeroConstant,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation needs integer exponents (denominator 1), got denominator {0}")]
    FractionalExponents(u32),
    #[error("input known to {available} terms, {needed} needed")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("the two constructions of {what} disagree at exponent {exponent}")]
    ConstructionMismatch { what: &'static str, exponent: String },
    #[error(transparent)]
    Num(#[from] ncho_numcore::NumError),
}
