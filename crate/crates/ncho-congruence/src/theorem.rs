//! The proved prime-power congruence for even-index normalized numbers and
//! its odd-index analogue, checked p-adically.

use rayon::prelude::*;
use serde::Serialize;

use ncho_apery::Parity;

use crate::error::CongruenceError;
use crate::lifts::jtilde_padic;
use crate::padic::{max_precision, require_odd_prime, PAdic};

/// Default bound on the largest index `m p^n` evaluated.
pub const DEFAULT_SIZE_CAP: u64 = 100_000;

/// Outcome of one instance `p^{wn} J~(m p^n) = p^{w(n-1)} J~(m p^{n-1}) mod p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    pub p: u64,
    pub m: u64,
    pub s: usize,
    pub n: u32,
    pub parity: Parity,
    pub holds: bool,
    pub lhs_residue: u64,
    pub rhs_residue: u64,
}

/// Weight `w` of the scaling `p^{w n}`: `2s` for `J~_{2s+2}`, `2s+1` for `J~_{2s+1}`.
pub(crate) fn scaling_weight(parity: Parity, s: usize) -> i64 {
    match parity {
        Parity::Even => 2 * s as i64,
        Parity::Odd => 2 * s as i64 + 1,
    }
}

pub(crate) fn index_size(p: u64, m: u64, n: u32, cap: u64) -> Result<u64, CongruenceError> {
    let size = p
        .checked_pow(n)
        .and_then(|q| q.checked_mul(m))
        .unwrap_or(u64::MAX);
    if size > cap {
        Err(CongruenceError::SizeCap { size, cap })
    } else {
        Ok(size)
    }
}

/// Scaled values `p^{w e} J~(N)` for every `s` in `0..=s_max`.
pub(crate) fn scaled(p: u64, parity: Parity, s_max: usize, big_n: u64, e: u32) -> Vec<PAdic> {
    jtilde_padic(p, parity, s_max, big_n, max_precision(p))
        .into_iter()
        .enumerate()
        .map(|(s, v)| v.shift(scaling_weight(parity, s) * e as i64))
        .collect()
}

fn validate(p: u64, m: u64, s: usize, n: u32, parity: Parity) -> Result<(), CongruenceError> {
    require_odd_prime(p)?;
    if m == 0 || 2 * m >= p {
        return Err(CongruenceError::Hypothesis(format!("need 1 <= m < p/2, got m = {m}, p = {p}")));
    }
    if n == 0 {
        return Err(CongruenceError::Hypothesis("need n >= 1".into()));
    }
    if s == 0 && parity == Parity::Even {
        return Err(CongruenceError::Hypothesis("need s >= 1".into()));
    }
    Ok(())
}

/// All `s <= s_max` at once for a fixed `(p, m, n)`.
fn check_all_s(
    p: u64,
    m: u64,
    s_max: usize,
    n: u32,
    parity: Parity,
    cap: u64,
) -> Result<Vec<CongruenceCheck>, CongruenceError> {
    let big = index_size(p, m, n, cap)?;
    let small = big / p;
    let lhs = scaled(p, parity, s_max, big, n);
    let rhs = scaled(p, parity, s_max, small, n - 1);
    (1..=s_max)
        .map(|s| {
            let lhs_residue = lhs[s].residue(n)?;
            let rhs_residue = rhs[s].residue(n)?;
            Ok(CongruenceCheck {
                p,
                m,
                s,
                n,
                parity,
                holds: lhs_residue == rhs_residue,
                lhs_residue,
                rhs_residue,
            })
        })
        .collect()
}

/// The proved even-index congruence for one `(p, m, s, n)`, with `1 <= m < p/2`.
pub fn weak_congruence(p: u64, m: u64, s: usize, n: u32) -> Result<CongruenceCheck, CongruenceError> {
    weak_congruence_capped(p, m, s, n, DEFAULT_SIZE_CAP)
}

pub fn weak_congruence_capped(p: u64, m: u64, s: usize, n: u32, cap: u64) -> Result<CongruenceCheck, CongruenceError> {
    validate(p, m, s, n, Parity::Even)?;
    Ok(check_all_s(p, m, s, n, Parity::Even, cap)?.pop().expect("s >= 1"))
}

/// The odd-index analogue, which is conjectural; a `false` result is data.
pub fn odd_congruence(p: u64, m: u64, s: usize, n: u32) -> Result<CongruenceCheck, CongruenceError> {
    validate(p, m, s, n, Parity::Odd)?;
    if s == 0 {
        return Err(CongruenceError::Hypothesis("need s >= 1".into()));
    }
    Ok(check_all_s(p, m, s, n, Parity::Odd, DEFAULT_SIZE_CAP)?.pop().expect("s >= 1"))
}

/// Summary of a sweep over primes, `m`, `s` and `n`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub parity: Parity,
    pub checked: usize,
    pub failures: Vec<CongruenceCheck>,
    /// `(p, m, n)` triples beyond the size cap.
    pub skipped: Vec<(u64, u64, u32)>,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `(p, m, s, n)` with `p` in `primes`, `1 <= m < p/2`, `1 <= s <= s_max`,
/// `1 <= n <= n_max`, skipping indices `m p^n > cap`.
pub fn congruence_sweep(
    primes: &[u64],
    s_max: usize,
    n_max: u32,
    parity: Parity,
    cap: u64,
) -> Result<SweepReport, CongruenceError> {
    for &p in primes {
        require_odd_prime(p)?;
    }
    let jobs: Vec<(u64, u64, u32)> = primes
        .iter()
        .flat_map(|&p| (1..p.div_ceil(2)).flat_map(move |m| (1..=n_max).map(move |n| (p, m, n))))
        .collect();
    let outcomes: Vec<_> = jobs
        .par_iter()
        .map(|&(p, m, n)| match check_all_s(p, m, s_max, n, parity, cap) {
            Ok(checks) => Ok(Ok(checks)),
            Err(CongruenceError::SizeCap { .. }) => Ok(Err((p, m, n))),
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;
    let mut report = SweepReport {
        parity,
        checked: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            Ok(checks) => {
                report.checked += checks.len();
                report.failures.extend(checks.into_iter().filter(|c| !c.holds));
            }
            Err(triple) => report.skipped.push(triple),
        }
    }
    Ok(report)
}
