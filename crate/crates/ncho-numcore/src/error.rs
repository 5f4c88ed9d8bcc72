use thiserror::Error;

/// Errors raised by the numeric core.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("zeta_half needs k >= 2, got {0}")]
    ZetaArgument(i64),
    #[error("division by a formal number with {0} terms; only single monomials are invertible")]
    NonMonomialDivisor(usize),
    #[error("monomial {0} has no inverse in the formal ring")]
    NonInvertibleMonomial(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(usize),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
