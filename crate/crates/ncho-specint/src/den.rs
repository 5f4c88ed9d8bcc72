//! Closed forms for `det Delta_k` and the kappa-expansion of the perturbed
//! determinant into cyclic block products.

use std::collections::BTreeMap;

use ncho_numcore::Rat;
use num_traits::{One, Zero};

use crate::error::SpecintError;
use crate::gauss::GaussRat;
use crate::matrix::{check_index_set, check_point, delta, det_exact, perturbed};

fn pow_rat(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

/// `(1 - u_1^2 ... u_k^2)^2`.
pub fn vk(u: &[Rat]) -> Rat {
    let prod: Rat = u.iter().map(|x| x * x).product();
    let gap = Rat::one() - prod;
    &gap * &gap
}

/// `prod_i (1 - u_i^4)`.
pub fn quartic_gaps(u: &[Rat]) -> Rat {
    u.iter().map(|x| Rat::one() - pow_rat(x, 4)).product()
}

/// Closed form `(1 - u_1^2...u_k^2)^2 / prod (1 - u_i^4)`.
pub fn vn_closed(u: &[Rat]) -> Rat {
    vk(u) / quartic_gaps(u)
}

/// Exact comparison of the determinant of `delta(k, u)` with its closed form.
pub fn vn_check(k: usize, u: &[Rat]) -> Result<bool, SpecintError> {
    let det = det_exact(&delta(k, u)?);
    Ok(det == GaussRat::real(vn_closed(u)))
}

/// Cyclic block product for a 1-based increasing index list `j` in `1..=k`:
/// the block from `j_i` up to `j_{i+1} - 1` (wrapping through `k`)
/// contributes `1 - prod u^4` over its indices. The empty list gives
/// `(1 - u_1^2...u_k^2)^2`.
pub fn c_factor(u: &[Rat], j: &[usize]) -> Rat {
    let k = u.len();
    if j.is_empty() {
        return vk(u);
    }
    let fourth: Vec<Rat> = u.iter().map(|x| pow_rat(x, 4)).collect();
    let mut out = Rat::one();
    for (pos, &start) in j.iter().enumerate() {
        let stop = j.get(pos + 1).copied().unwrap_or(k + j[0]);
        let block: Rat = (start..stop).map(|m| &fourth[(m - 1) % k]).product();
        out *= Rat::one() - block;
    }
    out
}

/// Coefficients `den_{k,d}` of `(-kappa^2)^d`, by enumeration of the
/// even-sized position subsets `S` of `jset` with sign `(-1)^{sum S}`.
pub fn den_terms(k: usize, u: &[Rat], jset: &[usize]) -> Result<BTreeMap<usize, Rat>, SpecintError> {
    check_point(k, u)?;
    check_index_set(k, jset)?;
    let len = jset.len();
    let mut out: BTreeMap<usize, Rat> = (0..=len / 2).map(|d| (d, Rat::zero())).collect();
    for mask in 0u32..(1 << len) {
        let size = mask.count_ones() as usize;
        if size % 2 != 0 {
            continue;
        }
        let positions: Vec<usize> = (0..len).filter(|b| mask >> b & 1 == 1).collect();
        let parity: usize = positions.iter().map(|p| p + 1).sum();
        let chosen: Vec<usize> = positions.iter().map(|&p| jset[p]).collect();
        let term = c_factor(u, &chosen);
        let slot = out.get_mut(&(size / 2)).expect("preallocated");
        if parity % 2 == 0 {
            *slot += term;
        } else {
            *slot -= term;
        }
    }
    Ok(out)
}

/// `sum_d (-kappa^2)^d den_{k,d}`.
pub fn den_expand(k: usize, u: &[Rat], kappa: &Rat, jset: &[usize]) -> Result<Rat, SpecintError> {
    let neg_sq = -(kappa * kappa);
    Ok(den_terms(k, u, jset)?
        .into_iter()
        .map(|(d, c)| c * pow_rat(&neg_sq, d as u32))
        .sum())
}

/// `det(delta + kappa xi) * prod (1 - u_i^4)`, exact over Q(i).
pub fn den_direct(k: usize, u: &[Rat], kappa: &Rat, jset: &[usize]) -> Result<GaussRat, SpecintError> {
    let det = det_exact(&perturbed(k, u, kappa, jset)?);
    Ok(det.scale(&quartic_gaps(u)))
}

/// Exact agreement of the subset expansion with the determinant.
pub fn den_expand_check(k: usize, u: &[Rat], kappa: &Rat, jset: &[usize]) -> Result<bool, SpecintError> {
    let direct = den_direct(k, u, kappa, jset)?;
    Ok(direct == GaussRat::real(den_expand(k, u, kappa, jset)?))
}
