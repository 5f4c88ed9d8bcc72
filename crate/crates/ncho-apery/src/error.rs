use thiserror::Error;

/// Errors raised while computing Apéry-like numbers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AperyError {
    #[error("index k = {k} is outside the supported range {min}..")]
    KOutOfRange { k: usize, min: usize },
    #[error("odd-parity Z-sums need s >= 1")]
    OddParityNeedsPositiveS,
    #[error("explicit formula available only for l in {{2, 3, 4}}, got {0}")]
    UnsupportedSmallL(usize),
    #[error("series truncation m_max must be at least 1")]
    EmptySeries,
    #[error("quadrature did not converge: estimate {value} with error {error}")]
    QuadratureFailed { value: f64, error: f64 },
    #[error("invalid spectral parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Num(#[from] ncho_numcore::NumError),
}
