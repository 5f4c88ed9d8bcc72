//! Torus averages `u_l(lambda)` by randomly shifted lattice rules and the
//! double-integral form of the meta-generating function.

use ncho_numcore::quadrature::GaussLegendre;
use ncho_numcore::Precision;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::AnalyticError;
use crate::hypergeom::f21_real;

/// Sampling plan: `samples` lattice points per replicate, `replicates`
/// independent random shifts drawn from `(seed, replicate index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct McConfig {
    pub samples: usize,
    pub seed: u64,
    pub replicates: usize,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            samples: 4096,
            seed: 0x5eed,
            replicates: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
}

impl McEstimate {
    /// `|mean - reference| <= 3 stderr`.
    pub fn within_three_sigma(&self, reference: f64) -> bool {
        (self.mean - reference).abs() <= 3.0 * self.stderr
    }
}

/// Supported Laurent polynomials and their constants `C_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MahlerFamily {
    L2,
    L3,
    L4,
    L6,
}

impl TryFrom<u32> for MahlerFamily {
    type Error = AnalyticError;
    fn try_from(l: u32) -> Result<Self, AnalyticError> {
        match l {
            2 => Ok(Self::L2),
            3 => Ok(Self::L3),
            4 => Ok(Self::L4),
            6 => Ok(Self::L6),
            other => Err(AnalyticError::Domain(format!("l = {other} not in {{2, 3, 4, 6}}"))),
        }
    }
}

impl MahlerFamily {
    pub fn l(self) -> u32 {
        match self {
            Self::L2 => 2,
            Self::L3 => 3,
            Self::L4 => 4,
            Self::L6 => 6,
        }
    }

    pub fn constant(self) -> f64 {
        match self {
            Self::L2 => 16.0,
            Self::L3 => 27.0,
            Self::L4 => 64.0,
            Self::L6 => 432.0,
        }
    }

    /// Bound on `|P_l|` over the torus.
    pub fn sup_norm(self) -> f64 {
        match self {
            Self::L2 => 4.0,
            _ => 3.0,
        }
    }

    /// `P_l(e^{i a}, e^{i b})` as `(re, im)`.
    fn eval(self, a: f64, b: f64) -> (f64, f64) {
        // each monomial x^m y^n contributes e^{i(m a + n b)}
        let terms: &[(f64, f64, f64)] = match self {
            Self::L2 => &[(1.0, 0.0, 1.0), (-1.0, 0.0, 1.0), (0.0, 1.0, 1.0), (0.0, -1.0, 1.0)],
            Self::L3 => &[(2.0, -1.0, 1.0), (-1.0, 2.0, 1.0), (-1.0, -1.0, 1.0)],
            Self::L4 => &[(1.0, 2.0, 1.0), (1.0, -2.0, 1.0), (-1.0, 0.0, 1.0)],
            Self::L6 => &[(2.0, -1.0, 1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, -1.0)],
        };
        terms.iter().fold((0.0, 0.0), |(re, im), &(m, n, c)| {
            let phase = m * a + n * b;
            (re + c * phase.cos(), im + c * phase.sin())
        })
    }
}

/// Rank-1 lattice generator close to `n / golden ratio`, coprime to `n`.
fn generator(n: usize) -> usize {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let mut g = ((n as f64 / golden).round() as usize).max(1);
    while gcd(g, n) != 1 {
        g += 1;
    }
    g
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `u_l(lambda) = (2 pi i)^{-2} int_{T^2} dx/x dy/y / (1 - lambda P_l(x, y))`.
///
/// Replicate means differ only through their shifts; the reported standard
/// error is floored at `16 eps |mean|` to account for rounding, which the
/// spread between replicates of a smooth periodic integrand can undershoot.
pub fn mahler_u(family: MahlerFamily, lambda: f64, cfg: McConfig) -> Result<McEstimate, AnalyticError> {
    if lambda.abs() * family.sup_norm() >= 1.0 {
        return Err(AnalyticError::Domain(format!(
            "|lambda| max|P| = {} violates the contraction condition",
            lambda.abs() * family.sup_norm()
        )));
    }
    if cfg.samples == 0 || cfg.replicates < 2 {
        return Err(AnalyticError::Domain("need samples >= 1 and replicates >= 2".into()));
    }
    let n = cfg.samples;
    let g = generator(n);
    let tau = std::f64::consts::TAU;
    let means: Vec<f64> = (0..cfg.replicates)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(r as u64);
            let (s1, s2): (f64, f64) = (rng.gen(), rng.gen());
            let mut acc = 0.0;
            for i in 0..n {
                let a = tau * ((i as f64 / n as f64 + s1) % 1.0);
                let b = tau * (((i * g % n) as f64 / n as f64 + s2) % 1.0);
                let (pr, pi) = family.eval(a, b);
                let (dr, di) = (1.0 - lambda * pr, -lambda * pi);
                acc += dr / (dr * dr + di * di);
            }
            acc / n as f64
        })
        .collect();
    let reps = means.len() as f64;
    let mean = means.iter().sum::<f64>() / reps;
    let var = means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (reps - 1.0);
    let stderr = (var / reps).sqrt().max(16.0 * f64::EPSILON * mean.abs());
    Ok(McEstimate { mean, stderr })
}

/// `2F1(1/l, 1 - 1/l; 1; C_l lambda^l)`.
pub fn mahler_reference(family: MahlerFamily, lambda: f64, prec: Precision) -> Result<f64, AnalyticError> {
    let l = family.l() as f64;
    f21_real(1.0 / l, 1.0 - 1.0 / l, 1.0, family.constant() * lambda.powi(family.l() as i32), prec)
}

/// Both sides of the double-integral representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralCheck {
    pub integral: f64,
    pub closed_form: f64,
    pub residual: f64,
}

/// `(l^2 / 2) int_0^1 int_0^1 (1 + (xy)^{l-2}) / (1 - (xy)^l - T(x^l - y^l)) dx dy`.
///
/// The corner `(1, 1)` is resolved by the Duffy substitution `v = u w` in
/// the variables `u = 1 - x`, `v = 1 - y` on each triangle, with
/// geometrically graded Gauss-Legendre panels in `u`. Differences of powers
/// are formed with `ln_1p`/`exp_m1` to avoid cancellation near the corner.
pub fn ve_integral(t: f64, family: MahlerFamily) -> f64 {
    let l = family.l() as f64;
    let integrand = |u: f64, v: f64| {
        let a = l * (-u).ln_1p();
        let b = l * (-v).ln_1p();
        let denom = -(a + b).exp_m1() - t * (a.exp_m1() - b.exp_m1());
        let numer = 1.0 + ((l - 2.0) / l * (a + b)).exp();
        numer / denom
    };
    let rule = GaussLegendre::new(16);
    let mut u_panels = vec![(0.0, 2f64.powi(-30))];
    u_panels.extend((0..30).map(|j| (2f64.powi(-(j + 1)), 2f64.powi(-j))));
    let w_panels: Vec<(f64, f64)> = (0..4).map(|j| (j as f64 / 4.0, (j + 1) as f64 / 4.0)).collect();
    let mut total = 0.0;
    for &(ua, ub) in &u_panels {
        for &(wa, wb) in &w_panels {
            total += rule.integrate(ua, ub, |u| {
                rule.integrate(wa, wb, |w| u * (integrand(u, u * w) + integrand(u * w, u)))
            });
        }
    }
    l * l / 2.0 * total
}

/// Compares [`ve_integral`] with `pi^2 / (2 sin^2(pi/l)) 2F1(1/l, 1 - 1/l; 1; T^2)`.
pub fn ve_integral_check(t: f64, family: MahlerFamily, prec: Precision) -> Result<IntegralCheck, AnalyticError> {
    if t.abs() > 0.3 {
        return Err(AnalyticError::Domain(format!("|T| = {} exceeds 0.3", t.abs())));
    }
    let l = family.l() as f64;
    let pi = std::f64::consts::PI;
    let closed_form = pi * pi / (2.0 * (pi / l).sin().powi(2)) * f21_real(1.0 / l, 1.0 - 1.0 / l, 1.0, t * t, prec)?;
    let integral = ve_integral(t, family);
    Ok(IntegralCheck {
        integral,
        closed_form,
        residual: (integral - closed_form).abs(),
    })
}
