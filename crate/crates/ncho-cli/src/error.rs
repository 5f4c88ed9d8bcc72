use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Apery(#[from] ncho_apery::AperyError),
    #[error(transparent)]
    Congruence(#[from] ncho_congruence::CongruenceError),
    #[error(transparent)]
    QSeries(#[from] ncho_qseries::QSeriesError),
    #[error(transparent)]
    Analytic(#[from] ncho_analytic::AnalyticError),
    #[error(transparent)]
    Specint(#[from] ncho_specint::SpecintError),
    #[error(transparent)]
    Num(#[from] ncho_numcore::NumError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}
