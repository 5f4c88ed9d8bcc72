//! Theta functions, eta quotients, Eisenstein series and the weight-4 form
//! `f = theta2^4 theta4^4`, with the iterated q-integrals built from it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use ncho_numcore::{bernoulli_number, rat, Rat};

use crate::error::QSeriesError;
use crate::identities::CheckOutcome;
use crate::series::{grid_len, RatSeries};

fn split(m: &Rat) -> Result<(usize, u32), QSeriesError> {
    if *m <= Rat::zero() {
        return Err(QSeriesError::InvalidArgument("argument multiplier must be positive".into()));
    }
    let a = m.numer().to_usize().ok_or_else(|| QSeriesError::InvalidArgument("multiplier too large".into()))?;
    let b = m.denom().to_u32().ok_or_else(|| QSeriesError::InvalidArgument("multiplier too large".into()))?;
    Ok((a, b))
}

/// Sparse integer-exponent data `(exponent numerator, coefficient)` placed on
/// the grid `1/denom` up to `order`.
fn place(denom: u32, order: u32, terms: impl Iterator<Item = (usize, i64)>) -> RatSeries {
    let len = grid_len(order, denom);
    let mut coeffs = vec![Rat::zero(); len];
    for (idx, c) in terms {
        if idx < len {
            coeffs[idx] += Rat::from_integer(BigInt::from(c));
        }
    }
    RatSeries::new(denom, coeffs).coarsen()
}

/// `prod_{n>=1} (1 - x^n)` by the pentagonal number theorem, as
/// `(exponent, sign)` pairs with exponent below `limit`.
fn pentagonal(limit: usize) -> Vec<(usize, i64)> {
    let mut out = vec![(0, 1)];
    for k in 1.. {
        let a = k * (3 * k - 1) / 2;
        if a >= limit {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.push((a, sign));
        let b = k * (3 * k + 1) / 2;
        if b < limit {
            out.push((b, sign));
        }
    }
    out
}

/// `eta(m tau) = q^{m/24} prod (1 - q^{m n})`.
pub fn eta(m: &Rat, order: u32) -> Result<RatSeries, QSeriesError> {
    let (a, b) = split(m)?;
    // exponent a (1 + 24 j) / (24 b)
    let denom = 24 * b;
    let limit = grid_len(order, denom);
    let terms = pentagonal(limit / (24 * a) + 1)
        .into_iter()
        .map(move |(j, s)| (a * (1 + 24 * j), s));
    Ok(place(denom, order, terms))
}

/// `prod_i eta(m_i tau)^{e_i}`, requiring a non-negative total leading exponent.
pub fn eta_quotient(factors: &[(Rat, i32)], order: u32) -> Result<RatSeries, QSeriesError> {
    let mut lead = Rat::zero();
    let mut product = RatSeries::one(1, grid_len(order, 1));
    for (m, e) in factors {
        let (a, b) = split(m)?;
        lead += m * rat(*e as i64, 24);
        let denom = b;
        let limit = grid_len(order, denom);
        let base = place(denom, order, pentagonal(limit / a + 1).into_iter().map(|(j, s)| (a * j, s)));
        product = product.mul(&base.powi(*e)?);
    }
    if lead < Rat::zero() {
        return Err(QSeriesError::InvalidArgument(format!("eta quotient has negative order {lead}")));
    }
    Ok(product.shift(&lead)?.truncate_order(&rat(order as i64, 1)).coarsen())
}

/// Which Jacobi theta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theta {
    Two,
    Three,
    Four,
}

impl TryFrom<u8> for Theta {
    type Error = QSeriesError;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            2 => Ok(Theta::Two),
            3 => Ok(Theta::Three),
            4 => Ok(Theta::Four),
            other => Err(QSeriesError::InvalidArgument(format!("theta index {other}"))),
        }
    }
}

/// `theta_i(m tau)` with `theta3 = sum q^{n^2/2}`, `theta4 = sum (-1)^n q^{n^2/2}`,
/// `theta2 = sum q^{(n+1/2)^2/2}`.
pub fn theta(which: Theta, m: &Rat, order: u32) -> Result<RatSeries, QSeriesError> {
    let (a, b) = split(m)?;
    // all exponents are a * e / (8 b) with e = 4 n^2 or (2n+1)^2
    let denom = 8 * b;
    let limit = grid_len(order, denom);
    let mut terms = Vec::new();
    for n in 0usize.. {
        let (e, c) = match which {
            Theta::Two => ((2 * n + 1) * (2 * n + 1), 2),
            Theta::Three => (4 * n * n, if n == 0 { 1 } else { 2 }),
            Theta::Four => (4 * n * n, if n == 0 { 1 } else if n % 2 == 1 { -2 } else { 2 }),
        };
        if a * e >= limit {
            break;
        }
        terms.push((a * e, c));
    }
    Ok(place(denom, order, terms.into_iter()))
}

/// `sum_{d | n} d^k`.
pub fn sigma_div(k: i64, n: u64) -> Rat {
    assert!(n >= 1, "divisor sums need n >= 1");
    let mut acc = Rat::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += pow_rat(d, k);
            if d * d != n {
                acc += pow_rat(n / d, k);
            }
        }
        d += 1;
    }
    acc
}

fn pow_rat(d: u64, k: i64) -> Rat {
    let p = Rat::from_integer(BigInt::from(d).pow(k.unsigned_abs() as u32));
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `E_k(m tau) = 1 + (2/zeta(1-k)) sum sigma_{k-1}(n) q^{m n}` for even `k >= 4`.
pub fn eisenstein(k: u32, m: &Rat, order: u32) -> Result<RatSeries, QSeriesError> {
    if k < 4 || k % 2 == 1 {
        return Err(QSeriesError::InvalidArgument(format!("weight {k} must be even and >= 4")));
    }
    // zeta(1-k) = -B_k / k
    let zeta = -bernoulli_number(k as usize) / rat(k as i64, 1);
    let factor = rat(2, 1) / zeta;
    let (a, b) = split(m)?;
    let denom = b;
    let len = grid_len(order, denom);
    let mut coeffs = vec![Rat::zero(); len];
    coeffs[0] = rat(1, 1);
    for n in 1.. {
        let idx = a * n;
        if idx >= len {
            break;
        }
        coeffs[idx] = &factor * sigma_div(k as i64 - 1, n as u64);
    }
    Ok(RatSeries::new(denom, coeffs).coarsen())
}

fn int(r: i64) -> Rat {
    rat(r, 1)
}

/// Both constructions of `t`: `-theta2^4/theta4^4`, and the eta quotient
/// `eta(tau)^8 eta(4 tau)^16 / eta(2 tau)^24` taken at `(tau+1)/2` and scaled by 16.
pub fn tmod_routes(order: u32) -> Result<(RatSeries, RatSeries), QSeriesError> {
    let th2 = theta(Theta::Two, &int(1), order)?;
    let th4 = theta(Theta::Four, &int(1), order)?;
    let by_theta = th2.pow(4).div(&th4.pow(4))?.neg().coarsen();
    let quotient = eta_quotient(&[(int(1), 8), (int(4), 16), (int(2), -24)], 2 * order)?;
    let by_eta = quotient.with_denom(1).half_shift()?.scale(&int(16)).coarsen();
    Ok((by_theta, by_eta))
}

fn dual(what: &'static str, a: RatSeries, b: &RatSeries) -> Result<RatSeries, QSeriesError> {
    match a.first_mismatch(b) {
        None => Ok(a),
        Some(e) => Err(QSeriesError::ConstructionMismatch {
            what,
            exponent: e.to_string(),
        }),
    }
}

/// The modular function `t(tau)`, with both constructions asserted equal.
pub fn tmod(order: u32) -> Result<RatSeries, QSeriesError> {
    let (a, b) = tmod_routes(order)?;
    dual("t", a, &b)
}

/// `theta4^4 / theta3^2` and `eta(2tau)^22 / (eta(tau)^12 eta(4tau)^8)` at `(tau+1)/2`.
pub fn wtilde2_routes(order: u32) -> Result<(RatSeries, RatSeries), QSeriesError> {
    let th3 = theta(Theta::Three, &int(1), order)?;
    let th4 = theta(Theta::Four, &int(1), order)?;
    let by_theta = th4.pow(4).div(&th3.pow(2))?.coarsen();
    let quotient = eta_quotient(&[(int(2), 22), (int(1), -12), (int(4), -8)], 2 * order)?;
    let by_eta = quotient.with_denom(1).half_shift()?.coarsen();
    Ok((by_eta, by_theta))
}

/// `w_2 / J_2(0)` as a q-series with constant term 1.
pub fn wtilde2(order: u32) -> Result<RatSeries, QSeriesError> {
    let (a, b) = wtilde2_routes(order)?;
    dual("w~2", a, &b)
}

/// `theta2^4 theta4^4` and `(E4(tau/2) - 17 E4(tau) + 16 E4(2 tau)) / 15`.
pub fn fquartic_routes(order: u32) -> Result<(RatSeries, RatSeries), QSeriesError> {
    let th2 = theta(Theta::Two, &int(1), order)?;
    let th4 = theta(Theta::Four, &int(1), order)?;
    let by_theta = th2.pow(4).mul(&th4.pow(4)).coarsen();
    let half = eisenstein(4, &rat(1, 2), order)?;
    let whole = eisenstein(4, &int(1), order)?;
    let double = eisenstein(4, &int(2), order)?;
    let by_eisenstein = half
        .sub(&whole.scale(&int(17)))
        .add(&double.scale(&int(16)))
        .scale(&rat(1, 15))
        .coarsen();
    Ok((by_theta, by_eisenstein))
}

/// The weight-4 form `f`, with both constructions asserted equal.
pub fn fquartic(order: u32) -> Result<RatSeries, QSeriesError> {
    let (a, b) = fquartic_routes(order)?;
    dual("f", a, &b)
}

fn integrate_times(mut g: RatSeries, times: u32) -> Result<RatSeries, QSeriesError> {
    for _ in 0..times {
        g = g.q_integrate()?;
    }
    Ok(g)
}

/// `f^k` integrated `2k` times against `dq/q`.
pub fn big_e(k: u32, order: u32) -> Result<RatSeries, QSeriesError> {
    if k == 0 {
        return Err(QSeriesError::InvalidArgument("k >= 1".into()));
    }
    integrate_times(fquartic(order)?.pow(k), 2 * k)
}

/// `f^k` integrated `4k - 1` times against `dq/q`.
pub fn big_g(k: u32, order: u32) -> Result<RatSeries, QSeriesError> {
    if k == 0 {
        return Err(QSeriesError::InvalidArgument("k >= 1".into()));
    }
    integrate_times(fquartic(order)?.pow(k), 4 * k - 1)
}

/// Closed form `16 (8 S(q^{1/2}) - 17 S(q) + 2 S(q^2))` with `S = sum sigma_{-3}(n) q^n`.
pub fn g1_closed_form(order: u32) -> RatSeries {
    let len = grid_len(order, 2);
    let mut coeffs = vec![Rat::zero(); len];
    for (step, weight) in [(1usize, 8i64), (2, -17), (4, 2)] {
        for n in 1.. {
            let idx = step * n;
            if idx >= len {
                break;
            }
            coeffs[idx] += sigma_div(-3, n as u64) * int(16 * weight);
        }
    }
    RatSeries::new(2, coeffs)
}

/// `G_1` by triple integration against its closed form.
pub fn g1_integration_check(order: u32) -> Result<CheckOutcome, QSeriesError> {
    Ok(CheckOutcome::compare("G1 triple integral", &big_g(1, order)?, &g1_closed_form(order)))
}

pub fn tmod_dual_check(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let (a, b) = tmod_routes(order)?;
    Ok(CheckOutcome::compare("t theta/eta", &a, &b))
}

pub fn wtilde2_dual_check(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let (a, b) = wtilde2_routes(order)?;
    Ok(CheckOutcome::compare("w~2 eta/theta", &a, &b))
}

pub fn fquartic_dual_check(order: u32) -> Result<CheckOutcome, QSeriesError> {
    let (a, b) = fquartic_routes(order)?;
    Ok(CheckOutcome::compare("f theta/Eisenstein", &a, &b))
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
