use serde::Serialize;

use crate::error::AperyError;

/// Parameters `alpha, beta > 0` with `alpha * beta > 1` of the
/// non-commutative harmonic oscillator, plus the derived `epsilon` and `kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralParams {
    alpha: f64,
    beta: f64,
}

impl SpectralParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, AperyError> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha <= 0.0 || beta <= 0.0 {
            return Err(AperyError::InvalidParams(format!(
                "alpha and beta must be positive, got {alpha} and {beta}"
            )));
        }
        if alpha * beta <= 1.0 {
            return Err(AperyError::InvalidParams(format!(
                "alpha * beta must exceed 1, got {}",
                alpha * beta
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Parameters with the given `kappa` and `alpha = beta`.
    pub fn from_kappa(kappa: f64) -> Result<Self, AperyError> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(AperyError::InvalidParams(format!("kappa must be positive, got {kappa}")));
        }
        let alpha = (1.0 + 1.0 / (kappa * kappa)).sqrt();
        Self::new(alpha, alpha)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `1 / sqrt(alpha beta)`.
    pub fn epsilon(&self) -> f64 {
        1.0 / (self.alpha * self.beta).sqrt()
    }

    /// `1 / sqrt(alpha beta - 1)`.
    pub fn kappa(&self) -> f64 {
        1.0 / (self.alpha * self.beta - 1.0).sqrt()
    }
}
