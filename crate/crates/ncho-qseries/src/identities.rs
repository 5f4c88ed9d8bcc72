//! Coefficient-level checks of the hypergeometric representations of the
//! Apery-like generating functions.

use serde::Serialize;

use ncho_apery::{j_at_zero, jtilde_cascade};
use ncho_numcore::{rat, FormalNumber, Rat};

use crate::error::QSeriesError;
use crate::forms::{big_e, theta, tmod, wtilde2, Theta};
use crate::ring::Coefficient;
use crate::series::{QSeries, RatSeries};

/// Outcome of an exact coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub holds: bool,
    /// Exponent bound up to which both sides were compared.
    pub compared_to: String,
    pub first_mismatch: Option<String>,
    /// Both sides at the first mismatch.
    pub detail: Option<(String, String)>,
}

impl CheckOutcome {
    pub fn compare<R: Coefficient>(name: &str, lhs: &QSeries<R>, rhs: &QSeries<R>) -> Self {
        let mismatch = lhs.first_mismatch(rhs);
        let bound = lhs.order().min(rhs.order());
        let detail = mismatch.as_ref().map(|e| {
            let show = |s: &QSeries<R>| s.coeff(e).map(|c| c.to_json().to_string()).unwrap_or_default();
            (show(lhs), show(rhs))
        });
        Self {
            name: name.to_string(),
            holds: mismatch.is_none(),
            compared_to: bound.to_string(),
            first_mismatch: mismatch.map(|e| e.to_string()),
            detail,
        }
    }
}

/// `compose(J~_k, t)`, the normalized generating function at `t(tau)`.
pub fn wtilde(k: usize, order: u32) -> Result<RatSeries, QSeriesError> {
    let t = tmod(order)?;
    let terms = t.len();
    let tables = jtilde_cascade(k, terms);
    RatSeries::compose(tables[k].values(), &t)
}

pub fn verify_w2(order: u32) -> Result<CheckOutcome, QSeriesError> {
    Ok(CheckOutcome::compare("w2", &wtilde(2, order)?, &wtilde2(order)?))
}

pub fn verify_w4(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let rhs = wtilde2(order)?.mul(&big_e(1, order)?).scale(&rat(-1, 4));
    Ok(CheckOutcome::compare("w4", &wtilde(4, order)?, &rhs))
}

pub fn verify_w6(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let rhs = wtilde2(order)?.mul(&big_e(2, order)?).scale(&rat(1, 16));
    Ok(CheckOutcome::compare("w6", &wtilde(6, order)?, &rhs))
}

fn ratio(m: usize) -> Result<FormalNumber, QSeriesError> {
    let num = j_at_zero(m).map_err(|e| QSeriesError::InvalidArgument(e.to_string()))?;
    let den = j_at_zero(2).map_err(|e| QSeriesError::InvalidArgument(e.to_string()))?;
    Ok(num.div_by_monomial(&den)?)
}

/// Stated coefficient `c'_{level, j}` of `E_j` in the expansion of the
/// generating function of weight `2 level + 2`, for `1 <= j <= level <= 4`.
pub fn cprime(level: usize, j: usize) -> Result<FormalNumber, QSeriesError> {
    if j == 0 || j > level || level > 4 {
        return Err(QSeriesError::InvalidArgument(format!("c' index ({level}, {j})")));
    }
    if j == level {
        return Ok(FormalNumber::one());
    }
    let w = 2 * level;
    match j {
        1 => ratio(w),
        2 => Ok(ratio(w - 2)?.scale(&rat(4, 1))),
        3 => Ok(ratio(w - 2)?.scale(&rat(117, 8)) + ratio(w - 4)?.scale(&rat(162, 8))),
        _ => unreachable!("j < level <= 4"),
    }
}

/// Substitutes the stated `c'` coefficients into the expansion of the
/// weight-`2k` generating function (divided by `J_2(0)`) and compares with
/// the cascade of normalized generating functions.
pub fn cprime_check(k: usize, order: u32) -> Result<CheckOutcome, QSeriesError> {
    if !(2..=5).contains(&k) {
        return Err(QSeriesError::InvalidArgument(format!("k = {k} outside 2..=5")));
    }
    let t = tmod(order)?;
    let tables = jtilde_cascade(2 * k, t.len());
    let mut lhs = QSeries::<FormalNumber>::zero(t.denom(), t.len());
    for j in 0..k {
        let w = RatSeries::compose(tables[2 * j + 2].values(), &t)?.to_formal();
        lhs = lhs.add(&w.scale_by(&ratio(2 * k - 2 * j)?));
    }
    let level = k - 1;
    let mut bracket = QSeries::<FormalNumber>::zero(t.denom(), t.len()).add_constant(&ratio(2 * k)?);
    let mut sign = Rat::from(num_bigint::BigInt::from(1));
    for j in 1..=level {
        sign *= rat(-1, 4);
        let term = big_e(j as u32, order)?.to_formal().scale_by(&cprime(level, j)?.scale(&sign));
        bracket = bracket.add(&term);
    }
    let rhs = wtilde2(order)?.to_formal().mul(&bracket);
    Ok(CheckOutcome::compare(&format!("cprime k={k}"), &lhs.coarsen(), &rhs.coarsen()))
}

/// `2F1(1/2, 1/2; 1; theta2^4/theta3^4) = theta3^2`.
pub fn theta_hypergeom_check(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let one = Rat::from(num_bigint::BigInt::from(1));
    let th2 = theta(Theta::Two, &one, order)?;
    let th3 = theta(Theta::Three, &one, order)?;
    let arg = th2.pow(4).div(&th3.pow(4))?.coarsen();
    // (C(2n, n)/4^n)^2 via the ratio ((2n - 1)/(2n))^2
    let mut coeffs = Vec::with_capacity(arg.len());
    let mut c = one.clone();
    for n in 0..arg.len() {
        if n > 0 {
            let r = rat(2 * n as i64 - 1, 2 * n as i64);
            c = c * &r * &r;
        }
        coeffs.push(c.clone());
    }
    let lhs = RatSeries::compose(&coeffs, &arg)?;
    Ok(CheckOutcome::compare("2F1 theta", &lhs, &th3.pow(2)))
}
