//! Binomial congruences behind the theorem, checked with exact integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use ncho_numcore::rational::central_binomial;
use ncho_numcore::{binom_neg_half, Rat};

use crate::error::CongruenceError;
use crate::padic::{int_ordp, ordp, require_odd_prime};

/// `C(n, k)` for a big upper argument.
fn big_binomial(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn divisible_by_power(x: &Rat, p: u64, n: u32) -> bool {
    x.is_zero() || ordp(x, p).expect("non-zero") >= n as i64
}

/// Both binomial congruences for `(p, m, n, j)`:
/// `C(-1/2, pj)^2 C(m p^n, pj) = C(-1/2, j)^2 C(m p^{n-1}, j) mod p^n`, and
/// `C(m p^n, j) = 0 mod p^n` whenever `p` does not divide `j`.
pub fn binom_lemma_check(p: u64, m: u64, n: u32, j: u64) -> Result<bool, CongruenceError> {
    require_odd_prime(p)?;
    if m == 0 || n == 0 || j == 0 {
        return Err(CongruenceError::Hypothesis("m, n, j must be positive".into()));
    }
    let top = BigUint::from(m) * BigUint::from(p).pow(n);
    let below = BigUint::from(m) * BigUint::from(p).pow(n - 1);
    let to_rat = |b: BigUint| Rat::from_integer(BigInt::from(b));
    let a = binom_neg_half(p * j);
    let b = binom_neg_half(j);
    let lhs = &a * &a * to_rat(big_binomial(&top, p * j));
    let rhs = &b * &b * to_rat(big_binomial(&below, j));
    let first = divisible_by_power(&(lhs - rhs), p, n);
    let second = j % p == 0 || divisible_by_power(&to_rat(big_binomial(&top, j)), p, n);
    Ok(first && second)
}

/// `ord_p C(-1/2, j) <= n - ord_p(2j+1)` under `1 <= 2j+1 < p^{n+1}`.
pub fn ordp_bound_check(p: u64, n: u32, j: u64) -> Result<bool, CongruenceError> {
    require_odd_prime(p)?;
    let bound = BigUint::from(p).pow(n + 1);
    if BigUint::from(2 * j + 1) >= bound {
        return Err(CongruenceError::Hypothesis(format!("need 2j+1 < p^(n+1), got j = {j}")));
    }
    let lhs = int_ordp(&BigInt::from(central_binomial(j)), p) as i64;
    let rhs = n as i64 - int_ordp(&BigInt::from(2 * j + 1), p) as i64;
    Ok(lhs <= rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralBinomRow {
    pub j: u64,
    /// `j'` with `2j' + 1 = p (2j + 1)`.
    pub j_prime: u64,
    /// `ord_p(2j + 1)`.
    pub r: u32,
    /// `ord_p C(2j, j)`.
    pub s: u32,
    /// `C(2j', j') = (-1)^((p-1)/2) C(2j, j) mod p^(r+1)`, a proved statement.
    pub proved_holds: bool,
    /// The same modulo `p^(s+r+1)`, which is open.
    pub conjectural_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralBinomReport {
    pub p: u64,
    pub rows: Vec<CentralBinomRow>,
}

impl CentralBinomReport {
    pub fn proved_all(&self) -> bool {
        self.rows.iter().all(|r| r.proved_holds)
    }

    pub fn conjectural_all(&self) -> bool {
        self.rows.iter().all(|r| r.conjectural_holds)
    }
}

/// Central-binomial congruences for `0 <= j <= j_max`.
pub fn central_binom_experiment(p: u64, j_max: u64) -> Result<CentralBinomReport, CongruenceError> {
    require_odd_prime(p)?;
    if j_max == 0 {
        return Err(CongruenceError::Hypothesis("need j_max >= 1".into()));
    }
    let sign = BigInt::from(if (p - 1) / 2 % 2 == 0 { 1 } else { -1 });
    let rows = (0..=j_max)
        .map(|j| {
            let j_prime = (p * (2 * j + 1) - 1) / 2;
            let r = int_ordp(&BigInt::from(2 * j + 1), p);
            let small = BigInt::from(central_binomial(j));
            let s = int_ordp(&small, p);
            let diff = BigInt::from(central_binomial(j_prime)) - &small * &sign;
            let holds = |e: u32| diff.is_multiple_of(&BigInt::from(p).pow(e));
            CentralBinomRow {
                j,
                j_prime,
                r,
                s,
                proved_holds: holds(r + 1),
                conjectural_holds: holds(s + r + 1),
            }
        })
        .collect();
    Ok(CentralBinomReport { p, rows })
}
