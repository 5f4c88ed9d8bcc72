//! Special values of the spectral zeta function at `k = 2..=5`.

use ncho_analytic::f21_real;
use ncho_apery::SpectralParams;
use ncho_numcore::{eval_formal, zeta_half, Precision};
use serde::Serialize;

use crate::error::SpecintError;
use crate::quad::{r1_quad, r2_quad, QuadConfig, QuadEstimate, QuadMethod};

/// `(alpha + beta) / (2 sqrt(alpha beta (alpha beta - 1)))`.
fn prefactor_base(params: &SpectralParams) -> f64 {
    let ab = params.alpha() * params.beta();
    (params.alpha() + params.beta()) / (2.0 * (ab * (ab - 1.0)).sqrt())
}

/// `(alpha - beta) / (alpha + beta)`.
fn asymmetry(params: &SpectralParams) -> f64 {
    (params.alpha() - params.beta()) / (params.alpha() + params.beta())
}

fn hurwitz_half(k: usize, prec: Precision) -> Result<f64, SpecintError> {
    Ok(eval_formal(&zeta_half(k as i64)?, prec).re_f64())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaEstimate {
    pub k: usize,
    pub value: f64,
    pub error: f64,
    pub method: QuadMethod,
    pub seed: u64,
    /// Quadrature estimates of the anomaly integrals that were needed
    /// (none when `alpha = beta`).
    pub anomalies: Vec<QuadEstimate>,
}

/// `zeta_Q(k)` from `zeta(k, 1/2)` plus the first anomaly and, for
/// `k >= 4`, the second one. Both anomalies carry an even power of
/// `(alpha - beta)/(alpha + beta)` and are skipped when it vanishes.
pub fn zeta_q(k: usize, params: &SpectralParams, cfg: &QuadConfig) -> Result<ZetaEstimate, SpecintError> {
    if !(2..=5).contains(&k) {
        return Err(SpecintError::KOutOfRange { k, min: 2, max: 5 });
    }
    let outer = 2.0 * prefactor_base(params).powi(k as i32);
    let eps2 = asymmetry(params).powi(2);
    let mut inner = hurwitz_half(k, Precision::default())?;
    let mut error = 0.0;
    let mut anomalies = Vec::new();
    if eps2 > 0.0 {
        let kappa = params.kappa();
        let first = r1_quad(k, kappa, cfg)?;
        inner += eps2 * first.value;
        error += eps2 * first.error;
        anomalies.push(first);
        if k >= 4 {
            let second = r2_quad(k, kappa, cfg)?;
            inner += eps2 * eps2 * second.value;
            error += eps2 * eps2 * second.error;
            anomalies.push(second);
        }
    }
    Ok(ZetaEstimate {
        k,
        value: outer * inner,
        error: outer * error,
        method: cfg.method,
        seed: cfg.seed,
        anomalies,
    })
}

/// `2 (alpha^2 - 1)^{-k/2} zeta(k, 1/2)`, the value at `alpha = beta`.
pub fn zeta_q_degenerate(k: usize, alpha: f64, prec: Precision) -> Result<f64, SpecintError> {
    SpectralParams::new(alpha, alpha)?;
    Ok(2.0 * (alpha * alpha - 1.0).powf(-(k as f64) / 2.0) * hurwitz_half(k, prec)?)
}

/// `2F1(1/4, 3/4; 1; -kappa^2)`, evaluated after the Pfaff transformation so
/// that the argument `kappa^2 / (1 + kappa^2)` lies in `[0, 1)`.
fn quarter_f21(kappa: f64, prec: Precision) -> Result<f64, SpecintError> {
    let k2 = kappa * kappa;
    let z = k2 / (1.0 + k2);
    Ok((1.0 + k2).powf(-0.25) * f21_real(0.25, 0.25, 1.0, z, prec)?)
}

/// Closed form of the first anomaly at `k = 2`: `3 zeta(2) 2F1(1/4,3/4;1;-kappa^2)^2`.
pub fn r21_closed(kappa: f64, prec: Precision) -> Result<f64, SpecintError> {
    let f = quarter_f21(kappa, prec)?;
    Ok(hurwitz_half(2, prec)? * f * f)
}

/// Closed form of `zeta_Q(2)` through the hypergeometric anomaly.
pub fn zeta_q2_closed(alpha: f64, beta: f64, prec: Precision) -> Result<f64, SpecintError> {
    let params = SpectralParams::new(alpha, beta)?;
    let base = std::f64::consts::PI * prefactor_base(&params);
    let f = quarter_f21(params.kappa(), prec)?;
    Ok(base * base * (1.0 + asymmetry(&params).powi(2) * f * f))
}
