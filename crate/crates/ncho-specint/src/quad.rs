//! Numerical evaluation of the anomaly integrals over `[0,1]^k`.
//!
//! Every integrand has the shape `2^k / sqrt(V_k(u) + sum_j c_j U_{t_j}(u))`
//! where `V_k = (1 - u_1^2...u_k^2)^2` and `U_t` is the product of
//! `1 - prod u^4` over consecutive blocks of sizes `t`. The corner
//! `u = (1,...,1)` makes it unbounded; `u_i = 1 - v_i^2` tames it.

use ncho_apery::AperyTables;
use ncho_numcore::quadrature::GaussLegendre;
use ncho_numcore::{binom_neg_half, eval_formal, rat_to_f64, Precision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::SpecintError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadMethod {
    TensorGl,
    StratifiedMc,
}

/// Quadrature settings. `points` is the Gauss-Legendre order per axis for
/// the tensor rule and the number of strata per axis for Monte Carlo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadConfig {
    pub method: QuadMethod,
    pub points: usize,
    pub replicates: usize,
    pub substitution: bool,
    pub seed: u64,
}

impl QuadConfig {
    pub fn tensor(points: usize) -> Self {
        Self {
            method: QuadMethod::TensorGl,
            points,
            replicates: 1,
            substitution: true,
            seed: 0,
        }
    }

    pub fn stratified(strata: usize, replicates: usize, seed: u64) -> Self {
        Self {
            method: QuadMethod::StratifiedMc,
            points: strata,
            replicates,
            substitution: true,
            seed,
        }
    }

    /// Tensor Gauss-Legendre with 64 nodes up to `k = 3`, jittered
    /// stratified sampling above.
    pub fn for_dimension(k: usize) -> Self {
        match k {
            0..=3 => Self::tensor(64),
            4 => Self::stratified(16, 16, 0),
            _ => Self::stratified(10, 16, 0),
        }
    }

    fn validate(&self) -> Result<(), SpecintError> {
        match self.method {
            QuadMethod::TensorGl if self.points < 2 => {
                Err(SpecintError::Config("tensor rule needs at least 2 nodes per axis".into()))
            }
            QuadMethod::StratifiedMc if self.points < 1 || self.replicates < 2 => Err(SpecintError::Config(
                "stratified sampling needs at least one stratum and two replicates".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Quadrature value with its error estimate: the difference to the
/// half-order tensor rule, or the replicate standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadEstimate {
    pub value: f64,
    pub error: f64,
    pub method: QuadMethod,
    pub seed: u64,
    pub evaluations: u64,
}

/// One square-root denominator: `(coefficient, block sizes)` pairs added to `V_k`.
type Shape = Vec<(f64, Vec<usize>)>;

struct Integrand {
    k: usize,
    weight: f64,
    shapes: Vec<Shape>,
    substitution: bool,
}

impl Integrand {
    fn eval(&self, v: &[f64], quartic: &mut [f64]) -> f64 {
        let mut jac = 1.0f64;
        let mut sq_prod = 1.0f64;
        for (i, &x) in v.iter().enumerate() {
            let u = if self.substitution {
                jac *= 2.0 * x;
                1.0 - x * x
            } else {
                x
            };
            let sq = u * u;
            sq_prod *= sq;
            quartic[i] = sq * sq;
        }
        if jac == 0.0 {
            return 0.0;
        }
        let gap = 1.0 - sq_prod;
        let base = gap * gap;
        let scale = 2f64.powi(self.k as i32);
        let mut total = 0.0;
        for shape in &self.shapes {
            let mut den = base;
            for (coef, blocks) in shape {
                let mut start = 0;
                let mut prod = 1.0;
                for &len in blocks {
                    let block: f64 = quartic[start..start + len].iter().product();
                    prod *= 1.0 - block;
                    start += len;
                }
                den += coef * prod;
            }
            total += scale / den.sqrt();
        }
        self.weight * jac * total
    }

    fn tensor(&self, points: usize) -> f64 {
        let rule = GaussLegendre::new(points);
        let nodes: Vec<(f64, f64)> = rule.mapped(0.0, 1.0).collect();
        let k = self.k;
        nodes
            .par_iter()
            .map(|&(x0, w0)| {
                let mut idx = vec![0usize; k - 1];
                let mut v = vec![0.0; k];
                let mut quartic = vec![0.0; k];
                v[0] = x0;
                let mut acc = 0.0;
                loop {
                    let mut w = w0;
                    for (slot, &i) in idx.iter().enumerate() {
                        v[slot + 1] = nodes[i].0;
                        w *= nodes[i].1;
                    }
                    acc += w * self.eval(&v, &mut quartic);
                    let mut pos = 0;
                    loop {
                        if pos == k - 1 {
                            return acc;
                        }
                        idx[pos] += 1;
                        if idx[pos] < points {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                }
            })
            .sum()
    }

    fn stratified_replicate(&self, strata: usize, seed: u64, replicate: usize) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(replicate as u64);
        let k = self.k;
        let cells = strata.pow(k as u32);
        let width = 1.0 / strata as f64;
        let mut cell = vec![0usize; k];
        let mut v = vec![0.0; k];
        let mut quartic = vec![0.0; k];
        let mut acc = 0.0;
        for _ in 0..cells {
            for (x, &c) in v.iter_mut().zip(&cell) {
                *x = (c as f64 + rng.gen::<f64>()) * width;
            }
            acc += self.eval(&v, &mut quartic);
            for c in cell.iter_mut() {
                *c += 1;
                if *c < strata {
                    break;
                }
                *c = 0;
            }
        }
        acc / cells as f64
    }

    fn integrate(&self, cfg: &QuadConfig) -> Result<QuadEstimate, SpecintError> {
        cfg.validate()?;
        let per_axis = cfg.points as u64;
        match cfg.method {
            QuadMethod::TensorGl => {
                let fine = self.tensor(cfg.points);
                let coarse = self.tensor((cfg.points / 2).max(1));
                Ok(QuadEstimate {
                    value: fine,
                    error: (fine - coarse).abs(),
                    method: cfg.method,
                    seed: cfg.seed,
                    evaluations: per_axis.pow(self.k as u32),
                })
            }
            QuadMethod::StratifiedMc => {
                let reps: Vec<f64> = (0..cfg.replicates)
                    .into_par_iter()
                    .map(|r| self.stratified_replicate(cfg.points, cfg.seed, r))
                    .collect();
                let n = reps.len() as f64;
                let mean = reps.iter().sum::<f64>() / n;
                let var = reps.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
                let floor = 16.0 * f64::EPSILON * mean.abs();
                Ok(QuadEstimate {
                    value: mean,
                    error: (var / n).sqrt().max(floor),
                    method: cfg.method,
                    seed: cfg.seed,
                    evaluations: per_axis.pow(self.k as u32) * cfg.replicates as u64,
                })
            }
        }
    }
}

fn check_kappa(kappa: f64) -> Result<(), SpecintError> {
    if kappa.is_finite() && kappa >= 0.0 {
        Ok(())
    } else {
        Err(SpecintError::KappaOutOfRange(kappa))
    }
}

/// Compositions of `total` into exactly `parts` positive integers, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for first in 1..=rest.saturating_sub(parts - 1) {
            prefix.push(first);
            go(rest - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// First anomaly `R_{k,1}(kappa)`: `k/2` times the sum over the splits
/// `(r, k-r)` of the integral with `kappa^2 U_{(r,k-r)}` added under the root.
pub fn r1_quad(k: usize, kappa: f64, cfg: &QuadConfig) -> Result<QuadEstimate, SpecintError> {
    if !(2..=5).contains(&k) {
        return Err(SpecintError::KOutOfRange { k, min: 2, max: 5 });
    }
    check_kappa(kappa)?;
    let k2 = kappa * kappa;
    let shapes = (1..k).map(|r| vec![(k2, vec![r, k - r])]).collect();
    Integrand {
        k,
        weight: k as f64 / 2.0,
        shapes,
        substitution: cfg.substitution,
    }
    .integrate(cfg)
}

/// Second anomaly `R_{k,2}(kappa)` over all four-part compositions `t` of `k`,
/// weighted by `k/4`.
pub fn r2_quad(k: usize, kappa: f64, cfg: &QuadConfig) -> Result<QuadEstimate, SpecintError> {
    if !(4..=5).contains(&k) {
        return Err(SpecintError::KOutOfRange { k, min: 4, max: 5 });
    }
    check_kappa(kappa)?;
    let k2 = kappa * kappa;
    let shapes = compositions(k, 4)
        .into_iter()
        .map(|t| vec![(k2, vec![t[0] + t[2], t[1] + t[3]]), (k2 + k2 * k2, t)])
        .collect();
    Integrand {
        k,
        weight: k as f64 / 4.0,
        shapes,
        substitution: cfg.substitution,
    }
    .integrate(cfg)
}

/// Partial sum of the binomial series in `kappa^2` and its tail bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesSum {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// `R_{k,1}(kappa) = (k/2) sum_n C(-1/2, n) J_k(n) kappa^{2n}` with the
/// `J_k(n)` taken from their exact zeta-value expressions.
///
/// The terms alternate in sign and shrink geometrically, so summation stops
/// once a term falls below double-precision resolution of the sum; the tail is
/// bounded by the last term times `rho / (1 - rho)`, `rho` the largest of the
/// last few term ratios.
pub fn r1_series(k: usize, kappa: f64, n_max: usize, prec: Precision) -> Result<SeriesSum, SpecintError> {
    if k < 2 {
        return Err(SpecintError::KOutOfRange { k, min: 2, max: usize::MAX });
    }
    check_kappa(kappa)?;
    let k2 = kappa * kappa;
    if k2 >= 1.0 {
        return Err(SpecintError::KappaOutOfRange(kappa));
    }
    let tables = AperyTables::new(k, n_max.max(1));
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut magnitudes: Vec<f64> = Vec::new();
    for n in 0..=n_max {
        let j = eval_formal(&tables.j_formal(k, n)?, prec).re_f64();
        let term = rat_to_f64(&binom_neg_half(n as u64)) * j * power;
        sum += term;
        magnitudes.push(term.abs());
        power *= k2;
        if n >= 4 && term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    let terms = magnitudes.len();
    let rho = magnitudes
        .windows(2)
        .rev()
        .take(3)
        .filter(|w| w[0] > 0.0)
        .map(|w| w[1] / w[0])
        .fold(0.0f64, f64::max);
    if rho >= 1.0 {
        return Err(SpecintError::SeriesDivergent { terms, ratio: rho });
    }
    let last = magnitudes.last().copied().unwrap_or(0.0);
    let half_k = k as f64 / 2.0;
    Ok(SeriesSum {
        value: half_k * sum,
        tail_bound: half_k * last * rho / (1.0 - rho),
        terms,
    })
}
