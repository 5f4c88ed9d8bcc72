use serde::Serialize;

/// A numeric verification outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub parameters: serde_json::Value,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, parameters: serde_json::Value, residual: f64, tolerance: f64) -> Self {
        Self {
            check: check.into(),
            parameters,
            residual,
            tolerance,
            pass: residual.is_finite() && residual <= tolerance,
        }
    }
}
