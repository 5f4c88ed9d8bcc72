use ncho_numcore::NumError;
use ncho_qseries::QSeriesError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalyticError {
    #[error("point {0} is not in the upper half plane")]
    NotInUpperHalfPlane(String),
    #[error("series of order {order} leaves a tail bound {tail:e} above the target {target:e}")]
    InsufficientOrder { order: String, tail: f64, target: f64 },
    #[error("this check needs odd k, got {0}")]
    EvenK(u32),
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("interpolation system is ill-conditioned (estimate {0:e})")]
    IllConditioned(f64),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
    #[error(transparent)]
    Num(#[from] NumError),
}
