//! Modular transformation laws of the differential Eisenstein series and of
//! the triple integral `G_1`, period polynomials, and the Ramanujan-type
//! evaluation derived from the transformation law.

use ncho_numcore::rational::factorial;
use ncho_numcore::{rat, BigComplex, Precision, Rat};
use ncho_qseries::{big_g, g1_closed_form, RatSeries};
use num_bigint::BigInt;
use serde::Serialize;

use crate::barnes::barnes_b;
use crate::error::AnalyticError;
use crate::evaluate::{default_target, eval_series, lambert_dg, order_for_points, zeta_value};
use crate::uhp::UhpPoint;

/// Residuals of a transformation law under two candidate normalizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransformResidual {
    /// With the coefficient `-4 k pi i` in front of the Barnes term.
    pub stated: f64,
    /// With the coefficient `+2 pi i`.
    pub corrected: f64,
}

fn two_pi_i(prec: Precision) -> BigComplex {
    BigComplex::pi(prec).mul_i().scale_rat(&rat(2, 1))
}

/// `B_{2,2k+2}(tau | (-1, tau)) / ((2k+1)(2k+2))`.
fn barnes_term(k: u32, tau: &BigComplex) -> BigComplex {
    let prec = tau.precision();
    let m = 2 * k as usize + 2;
    let b = barnes_b(m, tau, &BigComplex::from_int(-1, prec), tau);
    b.scale_rat(&rat(1, ((2 * k + 1) * (2 * k + 2)) as i64))
}

/// `|dG(-1/tau) - (-1/tau)^{2k} {dG(tau) + c B_{2,2k+2}(tau|(-1,tau))/((2k+1)(2k+2))}|`
/// for the stated and corrected constants `c`.
pub fn dg_transform_check(k: u32, tau: &UhpPoint) -> TransformResidual {
    let prec = tau.precision();
    let t = tau.tau();
    let lhs = lambert_dg(k, &tau.s_image(), prec);
    let base = lambert_dg(k, tau, prec);
    let factor = (-t.recip()).powi(2 * k as i64);
    let z = barnes_term(k, t);
    let residual = |c: BigComplex| {
        let rhs = &factor * &(&base + &(&c * &z));
        (&lhs - &rhs).abs_f64()
    };
    let stated = BigComplex::pi(prec).mul_i().scale_rat(&rat(-4 * k as i64, 1));
    TransformResidual {
        stated: residual(stated),
        corrected: residual(two_pi_i(prec)),
    }
}

fn g1_series(order: u32) -> Result<RatSeries, AnalyticError> {
    Ok(g1_closed_form(order))
}

/// `|tau^2 G~(-1/tau) - G~(tau) - 4 pi^3 tau / i|` with `G~ = G_1 - 56 zeta(3)`.
pub fn g1_period_check(tau: &UhpPoint) -> Result<f64, AnalyticError> {
    let prec = tau.precision();
    let target = default_target(prec);
    let image = tau.s_image();
    let series = order_for_points(g1_series, &[tau.clone(), image.clone()], target, 16)?;
    let shift = zeta_value(3, prec).scale_rat(&rat(56, 1));
    let at = |p: &UhpPoint| -> Result<BigComplex, AnalyticError> { Ok(&eval_series(&series, p, target)?.value - &shift) };
    let t = tau.tau();
    let pi = BigComplex::pi(prec);
    // 4 pi^3 tau / i = -4 i pi^3 tau
    let cocycle = (&pi.powi(3) * t).mul_i().scale_rat(&rat(-4, 1));
    let defect = &(&(&t.powi(2) * &at(&image)?) - &at(tau)?) - &cocycle;
    Ok(defect.abs_f64())
}

/// Interpolated period polynomial `tau^{4k-2} G_k(-1/tau) - G_k(tau)`.
#[derive(Debug, Clone)]
pub struct PeriodPolynomial {
    pub k: u32,
    /// Coefficients of `tau^0, tau^1, ...`.
    pub coeffs: Vec<BigComplex>,
    /// Largest deviation on the points not used for interpolation.
    pub heldout_residual: f64,
    /// Ratio of the largest to the smallest pivot modulus.
    pub condition: f64,
}

impl PeriodPolynomial {
    pub fn eval(&self, tau: &BigComplex) -> BigComplex {
        self.coeffs
            .iter()
            .rev()
            .fold(BigComplex::zero(tau.precision()), |acc, c| &(&acc * tau) + c)
    }

    /// Relative deviation of each coefficient from `reference`.
    pub fn relative_errors(&self, reference: &[BigComplex]) -> Vec<f64> {
        self.coeffs
            .iter()
            .zip(reference)
            .map(|(c, r)| (c - r).abs_f64() / r.abs_f64().max(f64::MIN_POSITIVE))
            .collect()
    }
}

/// `56 zeta(3)(tau^2 - 1) + 4 pi^3 tau / i` as `[c0, c1, c2]`.
pub fn r1s_closed_form(prec: Precision) -> Vec<BigComplex> {
    let z = zeta_value(3, prec).scale_rat(&rat(56, 1));
    let linear = BigComplex::pi(prec).powi(3).mul_i().scale_rat(&rat(-4, 1));
    vec![-z.clone(), linear, z]
}

/// Sample points near the unit circle with both `tau` and `-1/tau` well
/// inside the upper half plane.
pub fn default_period_points(k: u32, prec: Precision) -> Vec<UhpPoint> {
    let count = 4 * k as usize + 4;
    (0..count)
        .map(|j| {
            let angle = 1.0 + 1.2 * j as f64 / (count - 1) as f64;
            let radius = 0.9 + 0.2 * ((j * 7) % count) as f64 / count as f64;
            UhpPoint::from_f64(radius * angle.cos(), radius * angle.sin(), prec).expect("angle in (0, pi)")
        })
        .collect()
}

/// Solves a dense complex system by Gaussian elimination with partial
/// pivoting; returns the solution and the pivot ratio.
fn solve(mut a: Vec<Vec<BigComplex>>, mut b: Vec<BigComplex>) -> (Vec<BigComplex>, f64) {
    let n = b.len();
    let (mut big, mut small) = (0f64, f64::INFINITY);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs_f64().total_cmp(&a[j][col].abs_f64()))
            .expect("non-empty");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].abs_f64();
        big = big.max(p);
        small = small.min(p);
        let inv = a[col][col].recip();
        for row in col + 1..n {
            let f = &a[row][col] * &inv;
            for c in col..n {
                let v = &a[row][c] - &(&f * &a[col][c]);
                a[row][c] = v;
            }
            let v = &b[row] - &(&f * &b[col]);
            b[row] = v;
        }
    }
    let prec = b[0].precision();
    let mut x = vec![BigComplex::zero(prec); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc = &acc - &(&a[row][c] * &x[c]);
        }
        x[row] = &acc / &a[row][row];
    }
    (x, big / small)
}

/// Fits the period polynomial of `G_k` through the first `4k - 1` points and
/// validates it on the rest.
pub fn period_poly(k: u32, points: &[UhpPoint]) -> Result<PeriodPolynomial, AnalyticError> {
    if k == 0 {
        return Err(AnalyticError::Domain("k >= 1".into()));
    }
    let degree = 4 * k as usize - 2;
    if points.len() < 4 * k as usize + 4 {
        return Err(AnalyticError::Domain(format!("need {} points, got {}", 4 * k + 4, points.len())));
    }
    let prec = points[0].precision();
    let target = default_target(prec);
    let mut all: Vec<UhpPoint> = points.to_vec();
    all.extend(points.iter().map(UhpPoint::s_image));
    let series = order_for_points(|o| Ok(big_g(k, o)?), &all, target, 16)?;
    let defect = |p: &UhpPoint| -> Result<BigComplex, AnalyticError> {
        let t = p.tau();
        let image = eval_series(&series, &p.s_image(), target)?.value;
        Ok(&(&t.powi(degree as i64) * &image) - &eval_series(&series, p, target)?.value)
    };
    let values = points.iter().map(defect).collect::<Result<Vec<_>, _>>()?;
    let nodes = degree + 1;
    let matrix = points[..nodes]
        .iter()
        .map(|p| (0..nodes).map(|e| p.tau().powi(e as i64)).collect())
        .collect();
    let (coeffs, condition) = solve(matrix, values[..nodes].to_vec());
    if !condition.is_finite() || condition > 1e40 {
        return Err(AnalyticError::IllConditioned(condition));
    }
    let poly = PeriodPolynomial {
        k,
        coeffs,
        heldout_residual: 0.0,
        condition,
    };
    let heldout_residual = points[nodes..]
        .iter()
        .zip(&values[nodes..])
        .map(|(p, v)| (&poly.eval(p.tau()) - v).abs_f64())
        .fold(0.0, f64::max);
    Ok(PeriodPolynomial { heldout_residual, ..poly })
}

/// Both sides of the Ramanujan-type evaluation of
/// `sum n^{-2k-1} / (1 - e^{-2 pi n})`.
#[derive(Debug, Clone, Serialize)]
pub struct RamanujanResidual {
    pub lhs: f64,
    pub rhs_stated: f64,
    pub rhs_corrected: f64,
    pub stated: f64,
    pub corrected: f64,
}

/// Compares the direct sum with `c B_{2,2k+2}(i | (-1, i)) + zeta(2k+1)/2`,
/// where the stated constant is `k i (2 pi)^{2k+1} / (2 (-1)^k (2k+2)!)` and
/// the corrected one `-pi i (2 pi)^{2k} / (2 (-1)^k (2k+2)!)`.
pub fn ramanujan_check(k: u32, prec: Precision) -> Result<RamanujanResidual, AnalyticError> {
    if k % 2 == 0 {
        return Err(AnalyticError::EvenK(k));
    }
    let s = 2 * k + 1;
    let zeta = zeta_value(s, prec);
    // direct sum: zeta(s) + sum n^{-s} e^{-2 pi n} / (1 - e^{-2 pi n})
    let tol = 2f64.powi(-(prec.bits() as i32));
    let base = BigComplex::pi(prec).scale_rat(&rat(-2, 1)).exp();
    let one = BigComplex::one(prec);
    let mut lhs = zeta.clone();
    let mut power = one.clone();
    for n in 1..10_000i64 {
        power = &power * &base;
        let term = &(&power / &(&one - &power)) * &BigComplex::from_int(n, prec).powi(-(s as i64));
        lhs = &lhs + &term;
        if term.abs_f64() < tol {
            break;
        }
    }
    let i = BigComplex::i(prec);
    let b = barnes_b(2 * k as usize + 2, &i, &BigComplex::from_int(-1, prec), &i);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let denom = Rat::from_integer(BigInt::from(factorial(2 * k as u64 + 2)) * (2 * sign));
    let two_pi = BigComplex::pi(prec).scale_rat(&rat(2, 1));
    let stated_c = two_pi.powi(s as i64).mul_i().scale_rat(&(rat(k as i64, 1) / &denom));
    let corrected_c = (&BigComplex::pi(prec) * &two_pi.powi(2 * k as i64)).mul_i().scale_rat(&(rat(-1, 1) / &denom));
    let half_zeta = zeta.scale_rat(&rat(1, 2));
    let rhs_stated = &(&stated_c * &b) + &half_zeta;
    let rhs_corrected = &(&corrected_c * &b) + &half_zeta;
    Ok(RamanujanResidual {
        lhs: lhs.re_f64(),
        rhs_stated: rhs_stated.re_f64(),
        rhs_corrected: rhs_corrected.re_f64(),
        stated: (&lhs - &rhs_stated).abs_f64(),
        corrected: (&lhs - &rhs_corrected).abs_f64(),
    })
}
