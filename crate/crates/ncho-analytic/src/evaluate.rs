//! Numeric evaluation of truncated q-expansions and of the Lambert form of
//! the differential Eisenstein series.

use ncho_numcore::rational::factorial;
use ncho_numcore::{eval_formal, rat, riemann_zeta_numeric, BigComplex, FormalNumber, Precision, Rat};
use ncho_qseries::{Coefficient, QSeries};
use num_bigint::BigInt;

use crate::error::AnalyticError;
use crate::uhp::UhpPoint;

/// Coefficients with a numeric value.
pub trait Numeric: Coefficient {
    fn to_complex(&self, prec: Precision) -> BigComplex;
}

impl Numeric for Rat {
    fn to_complex(&self, prec: Precision) -> BigComplex {
        BigComplex::from_rat(self, prec)
    }
}

impl Numeric for FormalNumber {
    fn to_complex(&self, prec: Precision) -> BigComplex {
        eval_formal(self, prec)
    }
}

/// A truncated sum together with a bound on the omitted tail.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    pub value: BigComplex,
    pub tail_bound: f64,
}

/// `2^{-bits/2}`, the default truncation target at a given precision.
pub fn default_target(prec: Precision) -> f64 {
    2f64.powi(-(prec.bits() as i32) / 2)
}

/// Sums `g` at `q = exp(2 pi i tau)`.
///
/// The tail bound assumes coefficients grow at most like a fourth power of
/// the index beyond the largest magnitude `M` seen in the upper half of the
/// known terms: with `r = |q|^{1/N}` and `L` known terms it is
/// `24 M r^L / (1 - r)^5`.
pub fn eval_series<R: Numeric>(g: &QSeries<R>, tau: &UhpPoint, target: f64) -> Result<SeriesValue, AnalyticError> {
    let prec = tau.precision();
    let len = g.len();
    let step = tau.nome(g.denom());
    let mut power = BigComplex::one(prec);
    let mut acc = BigComplex::zero(prec);
    let mut largest = 0f64;
    for (j, c) in g.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let v = c.to_complex(prec);
            if 2 * j >= len {
                largest = largest.max(v.abs_f64());
            }
            acc = &acc + &(&v * &power);
        }
        power = &power * &step;
    }
    let r = (-2.0 * std::f64::consts::PI * tau.im_f64() / g.denom() as f64).exp();
    let tail = 24.0 * largest * r.powi(len as i32) / (1.0 - r).powi(5);
    if tail > target {
        return Err(AnalyticError::InsufficientOrder {
            order: g.order().to_string(),
            tail,
            target,
        });
    }
    Ok(SeriesValue {
        value: acc,
        tail_bound: tail,
    })
}

/// Evaluates a family of expansions, doubling the order from `start` until
/// the tail bound meets `target`.
pub fn eval_adaptive<R: Numeric>(
    build: impl Fn(u32) -> Result<QSeries<R>, AnalyticError>,
    tau: &UhpPoint,
    target: f64,
    start: u32,
) -> Result<SeriesValue, AnalyticError> {
    let mut order = start.max(4);
    loop {
        match eval_series(&build(order)?, tau, target) {
            Err(AnalyticError::InsufficientOrder { .. }) if order < 4096 => order *= 2,
            other => return other,
        }
    }
}

/// Smallest power-of-two multiple of `start` whose expansion meets `target`
/// at every point of `points`.
pub fn order_for_points<R: Numeric>(
    build: impl Fn(u32) -> Result<QSeries<R>, AnalyticError>,
    points: &[UhpPoint],
    target: f64,
    start: u32,
) -> Result<QSeries<R>, AnalyticError> {
    let worst = points
        .iter()
        .min_by(|a, b| a.im_f64().total_cmp(&b.im_f64()))
        .ok_or_else(|| AnalyticError::Domain("no points".into()))?;
    let mut order = start.max(4);
    loop {
        let g = build(order)?;
        match eval_series(&g, worst, target) {
            Ok(_) => return Ok(g),
            Err(AnalyticError::InsufficientOrder { .. }) if order < 4096 => order *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// `(-1)^k (2k)! / (2 pi)^{2k}` numerically.
pub(crate) fn dg_prefactor(k: u32, prec: Precision) -> BigComplex {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let c = Rat::from_integer(BigInt::from(factorial(2 * k as u64)) * sign);
    let two_pi = BigComplex::pi(prec).scale_rat(&rat(2, 1));
    two_pi.powi(-2 * k as i64).scale_rat(&c)
}

pub(crate) fn zeta_value(s: u32, prec: Precision) -> BigComplex {
    BigComplex::from_real(riemann_zeta_numeric(s, prec.bits()), prec)
}

/// Lambert series `c_k {zeta(2k+1) + 2 sum n^{-2k-1} q^n / (1 - q^n)}`,
/// summed until `2 |q|^{n+1} / (1 - |q|)^2` drops below `2^{-bits}`.
pub fn lambert_dg(k: u32, tau: &UhpPoint, prec: Precision) -> BigComplex {
    let q = tau.nome(1);
    let r = q.abs_f64();
    let tol = 2f64.powi(-(prec.bits() as i32));
    let one = BigComplex::one(prec);
    let mut sum = BigComplex::zero(prec);
    let mut qn = BigComplex::one(prec);
    for n in 1u64.. {
        qn = &qn * &q;
        let lambert = &qn / &(&one - &qn);
        let weight = BigComplex::from_int(n as i64, prec).powi(-(2 * k as i64 + 1));
        sum = &sum + &(&weight * &lambert);
        if 2.0 * r.powi(n as i32 + 1) / (1.0 - r).powi(2) < tol {
            break;
        }
    }
    let bracket = &zeta_value(2 * k + 1, prec) + &sum.scale_rat(&rat(2, 1));
    &dg_prefactor(k, prec) * &bracket
}
