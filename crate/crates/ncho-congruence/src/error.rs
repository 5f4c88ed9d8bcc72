use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("zero has no p-adic valuation")]
    ZeroValuation,
    #[error("value is not {p}-integral (ord_p = {ordp})")]
    NotPIntegral { p: u64, ordp: i64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("index {size} exceeds the configured cap {cap}")]
    SizeCap { size: u64, cap: u64 },
    #[error("p-adic precision exhausted (absolute precision {available}, need {needed})")]
    PrecisionExhausted { available: i64, needed: i64 },
    #[error("modulus {p}^{exponent} does not fit in 64 bits")]
    ModulusTooLarge { p: u64, exponent: u32 },
}
