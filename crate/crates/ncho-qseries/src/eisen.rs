//! Differential Eisenstein series as Lambert expansions over the formal
//! constant ring, and Hecke operators at level one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use ncho_numcore::rational::factorial;
use ncho_numcore::{rat, FormalNumber, Rat};

use crate::error::QSeriesError;
use crate::forms::{gcd_u64, sigma_div};
use crate::ring::Coefficient;
use crate::series::QSeries;

pub type FormalSeries = QSeries<FormalNumber>;

fn prefactor(k: u32) -> FormalNumber {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let c = Rat::from_integer(BigInt::from(factorial(2 * k as u64)) * sign)
        / Rat::from_integer(BigInt::from(4).pow(k));
    FormalNumber::pi2_pow(-(k as i32)).scale(&c)
}

/// Lambert expansion of the derivative of the weight `-2k` Eisenstein series
/// in `s`, with integer exponents below `order`.
pub fn dg(k: u32, order: u32) -> Result<FormalSeries, QSeriesError> {
    if k == 0 {
        return Err(QSeriesError::InvalidArgument("k >= 1".into()));
    }
    let pre = prefactor(k);
    let constant = &pre * &FormalNumber::zeta_odd(2 * k + 1);
    let twice = pre.scale(&rat(2, 1));
    Ok(QSeries::from_fn(1, order as usize, |n| {
        if n == 0 {
            constant.clone()
        } else {
            twice.scale(&sigma_div(-(2 * k as i64) - 1, n as u64))
        }
    }))
}

/// `(1 + 4^k) dG(tau) - 4^k dG(tau/2) - dG(2 tau)`.
pub fn dg11(k: u32, order: u32) -> Result<FormalSeries, QSeriesError> {
    let four_k = Rat::from_integer(BigInt::from(4).pow(k));
    let base = dg(k, order)?;
    let half = dg(k, 2 * order)?.scale_tau(&rat(1, 2))?;
    let double = base.scale_tau(&rat(2, 1))?;
    let out = base
        .scale(&(&four_k + Rat::one()))
        .sub(&half.scale(&four_k))
        .sub(&double);
    Ok(out.truncate(2 * order as usize))
}

/// `-8 pi^2 (7 dG(1) + 2 dG11(1))`.
pub fn phi1(order: u32) -> Result<FormalSeries, QSeriesError> {
    let a = dg(1, order)?.scale(&rat(7, 1));
    let b = dg11(1, order)?.scale(&rat(2, 1));
    let pi2 = FormalNumber::pi2_pow(1).scale(&rat(-8, 1));
    Ok(a.add(&b).scale_by(&pi2).coarsen())
}

/// `G_1 - (phi_1 + 56 zeta(3))`, coefficient by coefficient.
pub fn g1_phi_difference(order: u32) -> Result<FormalSeries, QSeriesError> {
    let g1 = crate::forms::big_g(1, order)?.to_formal();
    let rhs = phi1(order)?.add_constant(&FormalNumber::zeta_odd(3).scale(&rat(56, 1)));
    Ok(g1.sub(&rhs).coarsen())
}

/// Hecke operator `T(n)` of weight `weight` on an integer-exponent series,
/// returning `out_len` coefficients.
pub fn hecke<R: Coefficient>(g: &QSeries<R>, n: u64, weight: i64, out_len: usize) -> Result<QSeries<R>, QSeriesError> {
    if n == 0 {
        return Err(QSeriesError::InvalidArgument("n >= 1".into()));
    }
    let g = g.coarsen();
    if g.denom() != 1 {
        return Err(QSeriesError::FractionalExponents(g.denom()));
    }
    let needed = n as usize * out_len.saturating_sub(1) + 1;
    if needed > g.len() {
        return Err(QSeriesError::InsufficientOrder {
            needed,
            available: g.len(),
        });
    }
    let c = g.coeffs();
    Ok(QSeries::from_fn(1, out_len, |l| {
        let common = gcd_u64(n, l as u64);
        let mut acc = R::zero();
        for d in (1..=common).filter(|d| common % d == 0) {
            let idx = (n * l as u64 / (d * d)) as usize;
            let w = pow_i(d, weight - 1);
            acc = acc.add_ref(&c[idx].scale_rat(&w));
        }
        acc
    }))
}

/// Longest Hecke image available from `g`.
pub fn hecke_full<R: Coefficient>(g: &QSeries<R>, n: u64, weight: i64) -> Result<QSeries<R>, QSeriesError> {
    let len = g.coarsen().len();
    let out = if len == 0 { 0 } else { (len - 1) / n.max(1) as usize + 1 };
    hecke(g, n, weight, out)
}

fn pow_i(d: u64, e: i64) -> Rat {
    let p = Rat::from_integer(BigInt::from(d).pow(e.unsigned_abs() as u32));
    if e >= 0 || p.is_zero() {
        p
    } else {
        p.recip()
    }
}
