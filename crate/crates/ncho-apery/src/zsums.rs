//! Nested harmonic-type sums `Z^even_s(k)`, `Z^odd_s(k)` and their
//! tail-sum partners `Y_s(n)` (truncated).

use num_traits::{One, Zero};

use ncho_numcore::{binom_neg_half, rat, Rat};

use crate::error::AperyError;

/// Which family of nested sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// `1/(j + 1/2)^2`.
pub(crate) fn inv_half_sq(j: usize) -> Rat {
    let d = rat(2 * j as i64 + 1, 2);
    (&d * &d).recip()
}

/// `(1/2) / ((j + 1/2)^3 C(-1/2, j)^2)`, the weight carried by the lowest
/// index of an odd chain.
pub(crate) fn odd_base_weight(j: usize) -> Rat {
    let d = rat(2 * j as i64 + 1, 2);
    let b = binom_neg_half(j as u64);
    (rat(2, 1) * &d * &d * &d * &b * &b).recip()
}

/// Table of `Z^parity_s(k)` for `0 <= s <= s_max`, `0 <= k <= k_max`.
///
/// Built by peeling the top index: `Z_s(k+1) = Z_s(k) - Z_{s-1}(k)/(k+1/2)^2`.
#[derive(Debug, Clone)]
pub struct ZTable {
    parity: Parity,
    rows: Vec<Vec<Rat>>,
}

impl ZTable {
    pub fn new(parity: Parity, s_max: usize, k_max: usize) -> Self {
        let mut rows = vec![vec![Rat::zero(); k_max + 1]; s_max + 1];
        // row 0: even convention Z_0 = 1; odd uses an auxiliary base row whose
        // increment reproduces the j_s weight.
        for k in 0..=k_max {
            rows[0][k] = match parity {
                Parity::Even => Rat::one(),
                Parity::Odd => Rat::zero(),
            };
        }
        for s in 1..=s_max {
            for k in 0..k_max {
                let step = match (parity, s) {
                    (Parity::Odd, 1) => -odd_base_weight(k),
                    _ => -(&rows[s - 1][k] * inv_half_sq(k)),
                };
                rows[s][k + 1] = &rows[s][k] + &step;
            }
        }
        Self { parity, rows }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn get(&self, s: usize, k: usize) -> &Rat {
        &self.rows[s][k]
    }

    pub fn row(&self, s: usize) -> &[Rat] {
        &self.rows[s]
    }
}

/// Exact value of `Z^parity_s(k)`.
pub fn zsum(parity: Parity, s: usize, k: usize) -> Result<Rat, AperyError> {
    if parity == Parity::Odd && s == 0 {
        return Err(AperyError::OddParityNeedsPositiveS);
    }
    Ok(ZTable::new(parity, s, k).get(s, k).clone())
}

/// Truncated tail sums `Y_s(n)` over chains `n <= j_1 <= ... <= j_s < cutoff`.
#[derive(Debug, Clone)]
pub struct YTable {
    rows: Vec<Vec<Rat>>,
}

impl YTable {
    /// Rows `0..=s_max`, columns `0..=cutoff`.
    pub fn new(parity: Parity, s_max: usize, cutoff: usize) -> Self {
        let mut rows = vec![vec![Rat::zero(); cutoff + 1]; s_max + 1];
        if parity == Parity::Even {
            rows[0] = vec![Rat::one(); cutoff + 1];
        }
        for s in 1..=s_max {
            for n in (0..cutoff).rev() {
                // chains with j_1 = n plus chains with j_1 > n
                let first = match (parity, s) {
                    (Parity::Odd, 1) => odd_base_weight(n),
                    _ => &rows[s - 1][n] * inv_half_sq(n),
                };
                rows[s][n] = &rows[s][n + 1] + &first;
            }
        }
        Self { rows }
    }

    pub fn get(&self, s: usize, n: usize) -> &Rat {
        &self.rows[s][n]
    }
}

/// Verifies the descent relation
/// `Z^p_s(k) = Y^p_s(k) - sum_{j<s} Y^p_{s-j}(0) Z^even_j(k)` for all
/// `1 <= s <= s_max`, `0 <= k <= k_max`, with the `Y` sums truncated at
/// `cutoff > k_max`. The truncation cancels identically, so the comparison
/// is exact.
pub fn descent_relation_holds(parity: Parity, s_max: usize, k_max: usize, cutoff: usize) -> bool {
    assert!(cutoff > k_max, "cutoff must exceed k_max");
    let z = ZTable::new(parity, s_max, k_max);
    let z_even = ZTable::new(Parity::Even, s_max, k_max);
    let y = YTable::new(parity, s_max, cutoff);
    (1..=s_max).all(|s| {
        (0..=k_max).all(|k| {
            let mut rhs = y.get(s, k).clone();
            for j in 0..s {
                rhs -= y.get(s - j, 0) * z_even.get(j, k);
            }
            rhs == *z.get(s, k)
        })
    })
}
