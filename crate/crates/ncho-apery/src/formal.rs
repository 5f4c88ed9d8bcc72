//! `J_k(n)` in the formal-constant ring, assembled from the normalized
//! tables and the Hurwitz values `J_m(0) = (m-1) zeta(m, 1/2)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use ncho_numcore::{binom_neg_half, binomial, rat, zeta_half, FormalNumber, Rat};

use crate::error::AperyError;
use crate::tables::{jtilde_cascade, JTable};
use crate::zsums::{inv_half_sq, odd_base_weight, Parity, ZTable};

/// A formal value of `J_k(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormalJ {
    pub k: usize,
    pub n: usize,
    pub value: FormalNumber,
}

/// `J_m(0) = (m-1) zeta(m, 1/2)` for `m >= 2`.
pub fn j_at_zero(m: usize) -> Result<FormalNumber, AperyError> {
    if m < 2 {
        return Err(AperyError::KOutOfRange { k: m, min: 2 });
    }
    Ok(zeta_half(m as i64)?.scale(&rat(m as i64 - 1, 1)))
}

/// Precomputed normalized tables, reused for many formal evaluations.
#[derive(Debug, Clone)]
pub struct AperyTables {
    tables: Vec<JTable>,
    n_max: usize,
}

impl AperyTables {
    pub fn new(k_max: usize, n_max: usize) -> Self {
        Self {
            tables: jtilde_cascade(k_max.max(2), n_max.max(1)),
            n_max: n_max.max(1),
        }
    }

    pub fn k_max(&self) -> usize {
        self.tables.len() - 1
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn table(&self, k: usize) -> &JTable {
        &self.tables[k]
    }

    /// `J~_k(n)`.
    pub fn jtilde(&self, k: usize, n: usize) -> &Rat {
        &self.tables[k].values()[n]
    }

    /// `J_k(n)` from the normalization relations.
    pub fn j_formal(&self, k: usize, n: usize) -> Result<FormalNumber, AperyError> {
        if k == 0 {
            return Ok(FormalNumber::zero());
        }
        if k > self.k_max() || n > self.n_max {
            return Err(AperyError::KOutOfRange { k, min: 1 });
        }
        if k % 2 == 0 {
            let s = k / 2;
            let mut acc = FormalNumber::zero();
            for j in 0..s {
                acc += &j_at_zero(k - 2 * j)?.scale(self.jtilde(2 * j + 2, n));
            }
            Ok(acc)
        } else {
            let s = (k - 1) / 2;
            let mut acc = FormalNumber::from_rat(self.jtilde(k, n).clone());
            for j in 0..s {
                acc += &j_at_zero(k - 2 * j)?.scale(self.jtilde(2 * j + 2, n));
            }
            Ok(acc)
        }
    }
}

/// `J_k(n)` as a formal number.
pub fn j_formal(k: usize, n: usize) -> Result<FormalJ, AperyError> {
    if k == 0 {
        return Err(AperyError::KOutOfRange { k, min: 1 });
    }
    let value = AperyTables::new(k, n).j_formal(k, n)?;
    Ok(FormalJ { k, n, value })
}

/// `J~_k(n)` from the explicit Z-sum formula, `k >= 3`.
pub fn jtilde_explicit(k: usize, n: usize) -> Result<Rat, AperyError> {
    if k < 3 {
        return Err(AperyError::KOutOfRange { k, min: 3 });
    }
    let (parity, s) = if k % 2 == 0 {
        (Parity::Even, (k - 2) / 2)
    } else {
        (Parity::Odd, (k - 1) / 2)
    };
    let z = ZTable::new(parity, s, n);
    Ok(binomial_transform(n, z.row(s)))
}

/// `sum_{j<=n} (-1)^j C(-1/2, j)^2 C(n, j) a_j`.
pub fn binomial_transform(n: usize, a: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (j, a_j) in a.iter().enumerate().take(n + 1) {
        if a_j.is_zero() {
            continue;
        }
        let b = binom_neg_half(j as u64);
        let term = &b * &b * Rat::from_integer(BigInt::from(binomial(n as u64, j as u64))) * a_j;
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// `J_l(n)` for `l in {2, 3, 4}` from the stated binomial-sum formulas.
pub fn j_explicit_small_l(l: usize, n: usize) -> Result<FormalNumber, AperyError> {
    let ones = vec![Rat::from_integer(BigInt::from(1)); n + 1];
    let s0 = binomial_transform(n, &ones);
    match l {
        2 => Ok(zeta_half(2)?.scale(&s0)),
        3 => {
            // inner_k = sum_{j<k} C(-1/2, j)^-2 / (j+1/2)^3 = 2 * sum_{j<k} odd_base_weight(j)
            let mut inner = Vec::with_capacity(n + 1);
            let mut partial = Rat::zero();
            for k in 0..=n {
                inner.push(partial.clone());
                partial += odd_base_weight(k) * rat(2, 1);
            }
            let rational_part = binomial_transform(n, &inner) * rat(-1, 2);
            Ok(FormalNumber::from_rat(rational_part) + zeta_half(3)?.scale(&(rat(2, 1) * &s0)))
        }
        4 => {
            let mut inner = Vec::with_capacity(n + 1);
            let mut partial = Rat::zero();
            for k in 0..=n {
                inner.push(partial.clone());
                partial += inv_half_sq(k);
            }
            let t = binomial_transform(n, &inner);
            Ok(zeta_half(2)?.scale(&(-t)) + zeta_half(4)?.scale(&(rat(3, 1) * &s0)))
        }
        other => Err(AperyError::UnsupportedSmallL(other)),
    }
}

/// Left side minus right side of
/// `4n^2 J_k(n) - (8n^2-8n+3) J_k(n-1) + 4(n-1)^2 J_k(n-2) - 4 J_{k-2}(n-1)`.
pub fn recurrence_defect(tables: &AperyTables, k: usize, n: usize) -> Result<FormalNumber, AperyError> {
    assert!(n >= 2 && k >= 2);
    let n_i = n as i64;
    let cur = tables.j_formal(k, n)?;
    let prev = tables.j_formal(k, n - 1)?;
    let prev2 = tables.j_formal(k, n - 2)?;
    let forcing = tables.j_formal(k - 2, n - 1)?;
    Ok(cur.scale(&rat(4 * n_i * n_i, 1)) - prev.scale(&rat(8 * n_i * n_i - 8 * n_i + 3, 1))
        + prev2.scale(&rat(4 * (n_i - 1) * (n_i - 1), 1))
        - forcing.scale(&rat(4, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_three_at_one() {
        let v = j_formal(3, 1).unwrap().value;
        let expected = FormalNumber::one() + FormalNumber::zeta_odd(3).scale(&rat(21, 2));
        assert_eq!(v, expected);
    }
}
