//! Floating-point routes to `J_k(n)`: the double series and the integral
//! representation. Both serve as independent checks of the exact tables.

use serde::Serialize;

use ncho_numcore::quadrature::{adaptive_gk, GaussLegendre};

use crate::error::AperyError;

/// Truncated series value together with its extrapolation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesEstimate {
    /// Partial sum over `m <= m_max`.
    pub partial: f64,
    /// Partial sum after one Richardson step against the half-length sum.
    pub accelerated: f64,
    /// Crude bound on the omitted tail of `partial`, plus accumulated rounding.
    pub tail_bound: f64,
}

/// `sum_j (-1)^j C(n, j) (1/2 + m + 2j)^-a` for `a = 1..=k-1`.
fn alternating_powers(m: usize, k: usize, binoms: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; k];
    for (j, c) in binoms.iter().enumerate() {
        let x = 1.0 / (0.5 + m as f64 + 2.0 * j as f64);
        let sign = if j % 2 == 0 { *c } else { -*c };
        let mut p = x;
        for slot in out.iter_mut().skip(1) {
            *slot += sign * p;
            p *= x;
        }
    }
    out
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for j in 1..=n {
        row[j] = row[j - 1] * (n + 1 - j) as f64 / j as f64;
    }
    row
}

/// Partial sums of the double series at `m_max / 2` and `m_max`.
/// Returns the two partial sums and the size of the last term.
fn series_partials(k: usize, n: usize, m_max: usize) -> (f64, f64, f64) {
    let binoms = binomial_row(n);
    let half = m_max / 2;
    let mut weight = 1.0; // C(2n + m, m)
    let mut total = 0.0;
    let mut at_half = 0.0;
    let mut last = 0.0;
    for m in 0..=m_max {
        let a = alternating_powers(m, k, &binoms);
        let inner: f64 = (1..k).map(|r| a[r] * a[k - r]).sum();
        last = weight * inner;
        total += last;
        if m == half {
            at_half = total;
        }
        weight *= (2 * n + m + 1) as f64 / (m + 1) as f64;
    }
    (at_half, total, last.abs())
}

/// `J_k(n)` from the double series, truncated at `m_max`.
///
/// Terms decay like `m^-k`, so the tail after `M` terms behaves like
/// `c M^(1-k)` and a Richardson step with ratio `2^(k-1)` removes its
/// leading part.
pub fn j_numeric_series(k: usize, n: usize, m_max: usize) -> Result<SeriesEstimate, AperyError> {
    if k < 2 {
        return Err(AperyError::KOutOfRange { k, min: 2 });
    }
    if m_max < 1 {
        return Err(AperyError::EmptySeries);
    }
    let m_max = m_max.max(2);
    let (at_half, partial, last) = series_partials(k, n, m_max);
    let ratio = 2f64.powi(k as i32 - 1);
    let accelerated = (ratio * partial - at_half) / (ratio - 1.0);
    // sum_{m > M} t_M (M/m)^k is about t_M M / (k-1); doubled for the
    // lower-order corrections
    let crude = 2.0 * last * m_max as f64 / (k - 1) as f64;
    let rounding = f64::EPSILON * m_max as f64 * partial.abs();
    let tail_bound = crude.max((accelerated - partial).abs()) + rounding;
    Ok(SeriesEstimate {
        partial,
        accelerated,
        tail_bound,
    })
}

/// Relative tolerance targeted by the integral route.
pub const INTEGRAL_REL_TOL: f64 = 1e-10;

/// `2^-(2n+1) B_n(u)`, written with `expm1` so that both the small-`u`
/// limit and the exponential tail stay accurate.
fn scaled_kernel(n: usize, u: f64, rule: &GaussLegendre) -> f64 {
    if u <= 0.0 {
        // limit at 0 is 4^n (n!)^2 / (2n+1)!
        return (1..=n).map(|i| 4.0 * (i * i) as f64 / ((2 * i) * (2 * i + 1)) as f64).product();
    }
    let panels = (u / 2.0).ceil().max(1.0) as usize;
    let width = u / panels as f64;
    let mut inner = 0.0;
    for p in 0..panels {
        let a = p as f64 * width;
        inner += rule.integrate(a, a + width, |t| {
            let left = -(-2.0 * t).exp_m1();
            let right = -(-2.0 * (u - t)).exp_m1();
            (left * right).powi(n as i32)
        });
    }
    let damp = -(-u).exp_m1();
    (-0.5 * u).exp() * inner / damp.powi(2 * n as i32 + 1)
}

/// `J_k(n)` from the integral representation.
///
/// The outer integral over `u` in `(0, inf)` is mapped to `x in (0, 1)` by
/// `u = -4 ln(1 - x)`, which turns the `exp(-u/2)` decay into `(1 - x)^2`
/// and leaves a bounded integrand.
pub fn j_numeric_integral(k: usize, n: usize) -> Result<f64, AperyError> {
    if k < 2 {
        return Err(AperyError::KOutOfRange { k, min: 2 });
    }
    let rule = GaussLegendre::new(16);
    let fact: f64 = (1..=k - 2).map(|i| i as f64).product();
    let integrand = |x: f64| {
        let u = -4.0 * (-x).ln_1p();
        if u > 400.0 {
            return 0.0;
        }
        let jac = 4.0 / (1.0 - x);
        u.powi(k as i32 - 2) / fact * scaled_kernel(n, u, &rule) * jac
    };
    let est = adaptive_gk(0.0, 1.0, 1e-300, INTEGRAL_REL_TOL, integrand);
    if est.converged {
        Ok(est.value)
    } else {
        Err(AperyError::QuadratureFailed {
            value: est.value,
            error: est.error,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_matches_half_pi_squared() {
        let v = j_numeric_integral(2, 0).unwrap();
        assert!((v - std::f64::consts::PI.powi(2) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn series_matches_two_hurwitz_three() {
        let est = j_numeric_series(3, 0, 4000).unwrap();
        let target = 14.0 * 1.202_056_903_159_594_2;
        assert!((est.accelerated - target).abs() < 1e-7);
        assert!((est.partial - target).abs() <= est.tail_bound * 2.0);
    }
}
