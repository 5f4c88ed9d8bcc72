//! The general ratio congruence, evaluated as experimental evidence.

use serde::Serialize;

use ncho_apery::Parity;

use crate::error::CongruenceError;
use crate::padic::require_odd_prime;
use crate::theorem::{index_size, scaled, DEFAULT_SIZE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: u32,
    /// Both ratios agree modulo `p^n`; `None` if precision ran out.
    pub congruent: Option<bool>,
    /// The right-hand ratio is non-zero modulo `p^n`.
    pub nonzero: Option<bool>,
    pub holds: Option<bool>,
    pub lhs_residue: Option<u64>,
    pub rhs_residue: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub p: u64,
    pub m: u64,
    pub s: usize,
    pub parity: Parity,
    /// `ord_p` of the reference value `p^w J~(m p)`.
    pub reference_ordp: i64,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.holds == Some(true))
    }
}

/// For `2 <= n <= n_max`, compares `p^{wn} J~(m p^n) / R` with
/// `p^{w(n-1)} J~(m p^{n-1}) / R` modulo `p^n`, where `R = p^w J~(m p)` and
/// `w = 2s` (even) or `2s+1` (odd). The reference's `p`-power is divided out
/// exactly, so no division in `Z / p^n` is needed.
pub fn conjecture_report(
    p: u64,
    m: u64,
    s: usize,
    n_max: u32,
    parity: Parity,
) -> Result<ConjectureReport, CongruenceError> {
    require_odd_prime(p)?;
    if m == 0 || s == 0 {
        return Err(CongruenceError::Hypothesis("need m >= 1 and s >= 1".into()));
    }
    if m * p < s as u64 {
        return Err(CongruenceError::Hypothesis(format!("need m p >= s, got m p = {} < {s}", m * p)));
    }
    index_size(p, m, n_max, DEFAULT_SIZE_CAP)?;
    let reference = scaled(p, parity, s, m * p, 1)[s];
    let inverse = reference
        .inverse()
        .ok_or(CongruenceError::PrecisionExhausted {
            available: reference.absolute_precision(),
            needed: 1,
        })?;
    let reference_ordp = reference.valuation().expect("non-zero");
    let mut rows = Vec::new();
    let mut previous = None;
    for n in 1..=n_max {
        let value = scaled(p, parity, s, m * p.pow(n), n)[s].mul(&inverse);
        if let Some(prev) = previous.replace(value) {
            let modulus = n as i64;
            let congruent = value.sub(&prev).vanishes_mod(modulus);
            let nonzero = prev.vanishes_mod(modulus).map(|z| !z);
            let holds = match (congruent, nonzero) {
                (Some(a), Some(b)) => Some(a && b),
                (Some(false), _) | (_, Some(false)) => Some(false),
                _ => None,
            };
            rows.push(ConjectureRow {
                n,
                congruent,
                nonzero,
                holds,
                lhs_residue: value.residue(n).ok(),
                rhs_residue: prev.residue(n).ok(),
            });
        }
    }
    Ok(ConjectureReport {
        p,
        m,
        s,
        parity,
        reference_ordp,
        rows,
    })
}
