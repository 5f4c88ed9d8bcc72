use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecintError {
    #[error("dimension k = {k} outside the supported range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("u[{index}] = {value} is not strictly between 0 and 1")]
    UOutOfRange { index: usize, value: String },
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("index set must have even size, got {0}")]
    OddIndexSet(usize),
    #[error("index set must be strictly increasing within 1..={k}: {indices:?}")]
    BadIndexSet { k: usize, indices: Vec<usize> },
    #[error("matrix is not square or dimensions differ")]
    Shape,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("leading principal minor of order {0} vanishes")]
    SingularMinor(usize),
    #[error("LDU reconstruction mismatch")]
    Reconstruction,
    #[error("kappa = {0} outside the admissible range")]
    KappaOutOfRange(f64),
    #[error("series did not settle within {terms} terms (last ratio {ratio})")]
    SeriesDivergent { terms: usize, ratio: f64 },
    #[error("quadrature configuration invalid: {0}")]
    Config(String),
    #[error(transparent)]
    Apery(#[from] ncho_apery::AperyError),
    #[error(transparent)]
    Num(#[from] ncho_numcore::NumError),
    #[error(transparent)]
    Analytic(#[from] ncho_analytic::AnalyticError),
}
