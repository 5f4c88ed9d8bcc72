//! Gauss hypergeometric series and the even meta-generating function.

use ncho_numcore::{rat, BigComplex, Precision};

use crate::error::AnalyticError;
use crate::evaluate::zeta_value;

/// Largest `|z|` accepted by [`f21`].
pub const F21_RADIUS: f64 = 0.95;

/// `2F1(a, b; c; z)` by direct summation.
///
/// For `n > |c|` the term ratio is bounded by
/// `rho_n = |z| (1 + |a - 1|/(n + 1)) (1 + |b - c|/(n - |c|))`, which decreases
/// in `n`; summation stops once `|t_n| rho_n / (1 - rho_n)` is below
/// `2^{-bits}` relative to the partial sum.
pub fn f21(a: &BigComplex, b: &BigComplex, c: &BigComplex, z: &BigComplex) -> Result<BigComplex, AnalyticError> {
    let prec = z.precision();
    let radius = z.abs_f64();
    if radius > F21_RADIUS {
        return Err(AnalyticError::Domain(format!("|z| = {radius} exceeds {F21_RADIUS}")));
    }
    let c_abs = c.abs_f64();
    let nearest = c.re_f64().round();
    if nearest <= 0.0 && (c - &BigComplex::from_f64(nearest, 0.0, prec)).abs_f64() < 1e-30 {
        return Err(AnalyticError::Domain("c is a non-positive integer".into()));
    }
    let one = BigComplex::one(prec);
    let a_minus_one = (a - &one).abs_f64();
    let b_minus_c = (b - c).abs_f64();
    let tol = 2f64.powi(-(prec.bits() as i32));
    let mut term = one.clone();
    let mut sum = one;
    for n in 0u64..1_000_000 {
        let nf = BigComplex::from_int(n as i64, prec);
        let ratio = &(&(&(a + &nf) * &(b + &nf)) / &(&(c + &nf) * &BigComplex::from_int(n as i64 + 1, prec))) * z;
        term = &term * &ratio;
        sum = &sum + &term;
        let m = (n + 1) as f64;
        if m > c_abs + 1.0 {
            let rho = radius * (1.0 + a_minus_one / (m + 1.0)) * (1.0 + b_minus_c / (m - c_abs));
            if rho < 1.0 && term.abs_f64() * rho / (1.0 - rho) <= tol * sum.abs_f64().max(1.0) {
                return Ok(sum);
            }
        }
    }
    Err(AnalyticError::Domain("series did not converge".into()))
}

/// [`f21`] for real parameters and argument.
pub fn f21_real(a: f64, b: f64, c: f64, z: f64, prec: Precision) -> Result<f64, AnalyticError> {
    let r = |x: f64| BigComplex::from_f64(x, 0.0, prec);
    Ok(f21(&r(a), &r(b), &r(c), &r(z))?.re_f64())
}

fn sech2_factor(lambda: f64, prec: Precision) -> BigComplex {
    // pi^2 / (2 cosh^2(pi lambda)) = 2 pi^2 / (e^{x} + e^{-x})^2
    let pi = BigComplex::pi(prec);
    let x = pi.scale_rat(&ncho_numcore::Rat::from_float(lambda).expect("finite lambda"));
    let cosh2 = &x.exp() + &(-x).exp();
    (&pi * &pi).scale_rat(&rat(2, 1)) / (&cosh2 * &cosh2)
}

fn check_lambda(lambda: f64) -> Result<(), AnalyticError> {
    if lambda.abs() >= 0.5 {
        Err(AnalyticError::Domain(format!("|lambda| = {} must be below 1/2", lambda.abs())))
    } else {
        Ok(())
    }
}

/// `V^e(t, lambda) = pi^2 / (2 cosh^2 pi lambda) 2F1(1/2 + i lambda, 1/2 - i lambda; 1; t)`.
pub fn ve(t: f64, lambda: f64, prec: Precision) -> Result<f64, AnalyticError> {
    check_lambda(lambda)?;
    if t.abs() >= 1.0 {
        return Err(AnalyticError::Domain(format!("|t| = {} must be below 1", t.abs())));
    }
    let a = BigComplex::from_f64(0.5, lambda, prec);
    let b = a.conj();
    let value = f21(&a, &b, &BigComplex::one(prec), &BigComplex::from_f64(t, 0.0, prec))?;
    Ok((&sech2_factor(lambda, prec) * &value).re_f64())
}

/// `sum_{j odd} j^{-s}`.
fn odd_zeta(s: u32, prec: Precision) -> BigComplex {
    if s < 64 {
        let factor = rat(1, 1) - rat(1, 1) / ncho_numcore::Rat::from_integer(num_bigint::BigInt::from(2).pow(s));
        return zeta_value(s, prec).scale_rat(&factor);
    }
    let tol = 2f64.powi(-(prec.bits() as i32) - 8);
    let mut acc = BigComplex::one(prec);
    for j in (3i64..).step_by(2) {
        let term = BigComplex::from_int(j, prec).powi(-(s as i64));
        acc = &acc + &term;
        if term.abs_f64() < tol {
            break;
        }
    }
    acc
}

/// `|sum_k (2k+1) zeta(2k+2, 1/2) (-1)^k lambda^{2k} - pi^2 / (2 cosh^2 pi lambda)|`.
pub fn ve0_check(lambda: f64, prec: Precision) -> Result<f64, AnalyticError> {
    check_lambda(lambda)?;
    // zeta(s, 1/2) = 2^s sum_{j odd} j^{-s}; the k-th term is 4 (2k+1) (-x)^k odd_zeta(2k+2), x = 4 lambda^2
    let x = 4.0 * lambda * lambda;
    let x_big = BigComplex::from_f64(lambda, 0.0, prec).powi(2).scale_rat(&rat(4, 1));
    let tol = 2f64.powi(-(prec.bits() as i32));
    let mut power = BigComplex::one(prec);
    let mut acc = BigComplex::zero(prec);
    for k in 0u32.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = (&power * &odd_zeta(2 * k + 2, prec)).scale_rat(&rat(4 * (2 * k as i64 + 1) * sign, 1));
        acc = &acc + &term;
        power = &power * &x_big;
        let k1 = k as f64 + 1.0;
        let tail = 4.0 * (2.0 * k1 + 1.0) * x.powf(k1) * 1.25 / (1.0 - x).powi(2);
        if tail < tol || x == 0.0 {
            break;
        }
    }
    Ok((&acc - &sech2_factor(lambda, prec)).abs_f64())
}

/// Spot check of `-D_t v_1(t) = -(v_1(t) - 1) / (4 t)` with
/// `D_t = t(1-t) d^2/dt^2 + (1-2t) d/dt - 1/4`, where the left side uses the
/// power series `sum t^n / (2n+1)` and the right side the closed form
/// `2F1(1, 1; 3/2; t/(t-1)) / (1 - t)`.
pub fn vodd_spot_check(t: f64, prec: Precision) -> Result<f64, AnalyticError> {
    if t == 0.0 || t.abs() > 0.5 {
        return Err(AnalyticError::Domain(format!("t = {t} must satisfy 0 < |t| <= 1/2")));
    }
    let (mut v, mut dv, mut d2v) = (0.0, 0.0, 0.0);
    for n in 0..2000 {
        let nf = n as f64;
        let c = 1.0 / (2.0 * nf + 1.0);
        v += c * t.powi(n);
        if n >= 1 {
            dv += c * nf * t.powi(n - 1);
        }
        if n >= 2 {
            d2v += c * nf * (nf - 1.0) * t.powi(n - 2);
        }
        if nf * nf * t.abs().powi(n) < 1e-18 && n > 4 {
            break;
        }
    }
    let operator = t * (1.0 - t) * d2v + (1.0 - 2.0 * t) * dv - 0.25 * v;
    let closed = f21_real(1.0, 1.0, 1.5, t / (t - 1.0), prec)? / (1.0 - t);
    Ok((-operator + (closed - 1.0) / (4.0 * t)).abs())
}
