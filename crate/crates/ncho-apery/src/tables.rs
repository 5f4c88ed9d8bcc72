//! Normalized Apéry-like numbers `J~_k(n)` by the three-term recurrence.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use ncho_numcore::rational::{factorial, odd_double_factorial};
use ncho_numcore::{binom_neg_half, binomial, rat, rat_to_string, Rat};

use crate::error::AperyError;

/// The sequence `J~_k(0..=n_max)` for a fixed `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JTable {
    k: usize,
    values: Vec<Rat>,
}

impl JTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.values.get(n)
    }

    /// CSV with header `k,n,value`, values as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", self.k, n, rat_to_string(v));
        }
        out
    }
}

impl Serialize for JTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            k: usize,
            values: Vec<String>,
        }
        Repr {
            k: self.k,
            values: self.values.iter().map(rat_to_string).collect(),
        }
        .serialize(serializer)
    }
}

/// `J~_1(n) = 2^n n! / (2n+1)!!`.
pub fn jtilde_one(n: usize) -> Rat {
    let num = (BigInt::from(1) << n) * BigInt::from(factorial(n as u64));
    Rat::new(num, BigInt::from(odd_double_factorial(n as u64)))
}

/// `J~_2(n) = sum_j (-1)^j C(-1/2, j)^2 C(n, j)`.
pub fn jtilde_two(n: usize) -> Rat {
    (0..=n as u64)
        .map(|j| {
            let b = binom_neg_half(j);
            let term = &b * &b * Rat::from_integer(BigInt::from(binomial(n as u64, j)));
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .fold(Rat::zero(), |acc, t| acc + t)
}

fn seed_at_one(k: usize) -> Rat {
    match k {
        3 | 4 => rat(1, 1),
        _ => Rat::zero(),
    }
}

/// One recurrence step for `J~_k(n)`, `n >= 2`.
fn recurrence_step(n: usize, prev: &Rat, prev2: &Rat, forcing: &Rat) -> Rat {
    let n_i = n as i64;
    let a = rat(8 * n_i * n_i - 8 * n_i + 3, 1);
    let b = rat(4 * (n_i - 1) * (n_i - 1), 1);
    let rhs = a * prev - b * prev2 + rat(4, 1) * forcing;
    rhs / rat(4 * n_i * n_i, 1)
}

/// All tables `J~_0, J~_1, ..., J~_{k_max}` up to `n_max`, built in the
/// k-cascade order so each forcing term is available.
pub fn jtilde_cascade(k_max: usize, n_max: usize) -> Vec<JTable> {
    let mut tables: Vec<JTable> = Vec::with_capacity(k_max + 1);
    tables.push(JTable {
        k: 0,
        values: vec![Rat::zero(); n_max + 1],
    });
    for k in 1..=k_max {
        let values = match k {
            1 => (0..=n_max).map(jtilde_one).collect(),
            2 => (0..=n_max).map(jtilde_two).collect(),
            _ => {
                let forcing = &tables[k - 2].values;
                let mut v = Vec::with_capacity(n_max + 1);
                v.push(Rat::zero());
                if n_max >= 1 {
                    v.push(seed_at_one(k));
                }
                for n in 2..=n_max {
                    let next = recurrence_step(n, &v[n - 1], &v[n - 2], &forcing[n - 1]);
                    v.push(next);
                }
                v
            }
        };
        tables.push(JTable { k, values });
    }
    tables
}

#[cfg(test)]
fn jtilde_two_sequence(n_max: usize) -> Vec<Rat> {
    let mut v = vec![rat(1, 1)];
    if n_max >= 1 {
        v.push(rat(3, 4));
    }
    for n in 2..=n_max {
        let next = recurrence_step(n, &v[n - 1], &v[n - 2], &Rat::zero());
        v.push(next);
    }
    v
}

/// The table `J~_k(0..=n_max)`.
pub fn jtilde(k: usize, n_max: usize) -> Result<JTable, AperyError> {
    if k == 0 {
        return Err(AperyError::KOutOfRange { k, min: 1 });
    }
    Ok(jtilde_cascade(k, n_max.max(1)).swap_remove(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_agree_with_recurrence_for_k_two() {
        let seq = jtilde_two_sequence(20);
        for (n, v) in seq.iter().enumerate() {
            assert_eq!(*v, jtilde_two(n));
        }
    }

    #[test]
    fn k_one_first_values() {
        assert_eq!(jtilde_one(0), rat(1, 1));
        assert_eq!(jtilde_one(1), rat(2, 3));
        assert_eq!(jtilde_one(2), rat(8, 15));
    }
}
