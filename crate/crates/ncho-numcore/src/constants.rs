//! Numeric values of `zeta(m)` for odd `m` by Euler-Maclaurin summation,
//! cached per precision, and evaluation of formal numbers.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use astro_float::BigFloat;
use num_bigint::BigInt;

use crate::bigcomplex::{pi_bigfloat, rat_to_bigfloat, with_consts, BigComplex, Precision, ROUND};
use crate::formal::FormalNumber;
use crate::rational::{bernoulli_number, Rat};

type ZetaCache = Mutex<HashMap<(u32, usize), BigFloat>>;

fn zeta_cache() -> &'static ZetaCache {
    static CACHE: OnceLock<ZetaCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `zeta(s)` for integer `s >= 2` at `bits` of precision.
///
/// Euler-Maclaurin with cut-off `N`: the remainder after the last Bernoulli
/// correction is bounded by the first omitted term, and summation stops once
/// that term drops below `2^-(bits+16)` relative to the partial sum.
pub fn riemann_zeta_numeric(s: u32, bits: usize) -> BigFloat {
    assert!(s >= 2, "zeta needs s >= 2");
    let key = (s, bits);
    if let Some(v) = zeta_cache().lock().expect("zeta cache").get(&key) {
        return v.clone();
    }
    let value = euler_maclaurin_zeta(s, bits);
    zeta_cache()
        .lock()
        .expect("zeta cache")
        .insert(key, value.clone());
    value
}

fn euler_maclaurin_zeta(s: u32, bits: usize) -> BigFloat {
    let w = bits + 64;
    let cutoff = (bits / 4).max(16) as u64;
    let mut sum = BigFloat::from_f64(0.0, w);
    for n in 1..cutoff {
        let term = BigFloat::from_u64(n, w).powi(s as usize, w, ROUND).reciprocal(w, ROUND);
        sum = sum.add(&term, w, ROUND);
    }
    let big_n = BigFloat::from_u64(cutoff, w);
    let n_pow_s = big_n.powi(s as usize, w, ROUND);
    // N^{1-s}/(s-1) + N^{-s}/2
    let tail_integral = big_n
        .div(&n_pow_s, w, ROUND)
        .div(&BigFloat::from_u64(s as u64 - 1, w), w, ROUND);
    let half = n_pow_s
        .reciprocal(w, ROUND)
        .div(&BigFloat::from_u64(2, w), w, ROUND);
    sum = sum.add(&tail_integral, w, ROUND).add(&half, w, ROUND);
    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    let tol = with_consts(|cc| {
        BigFloat::from_f64(2.0, w).pow(&BigFloat::from_i64(-(bits as i64) - 16, w), w, ROUND, cc)
    });
    let n_sq = big_n.mul(&big_n, w, ROUND);
    let mut rising = Rat::from_integer(BigInt::from(s));
    let mut fact = Rat::from_integer(BigInt::from(2));
    let mut n_power = n_pow_s.mul(&big_n, w, ROUND).reciprocal(w, ROUND);
    for j in 1.. {
        let b = bernoulli_number(2 * j);
        let coeff = rat_to_bigfloat(&(b * &rising / &fact), w);
        let term = coeff.mul(&n_power, w, ROUND);
        sum = sum.add(&term, w, ROUND);
        if term.abs().cmp(&tol.mul(&sum, w, ROUND)).unwrap_or(0) < 0 {
            break;
        }
        let a = (s as i64) + 2 * j as i64 - 1;
        rising *= Rat::from_integer(BigInt::from(a * (a + 1)));
        fact *= Rat::from_integer(BigInt::from((2 * j as i64 + 1) * (2 * j as i64 + 2)));
        n_power = n_power.div(&n_sq, w, ROUND);
    }
    let mut out = sum;
    out.set_precision(bits, ROUND).expect("valid precision");
    out
}

/// Numeric value of a formal number.
pub fn eval_formal(x: &FormalNumber, prec: Precision) -> BigComplex {
    let p = prec.bits() + 32;
    let pi2 = {
        let pi = pi_bigfloat(p);
        pi.mul(&pi, p, ROUND)
    };
    let mut acc = BigFloat::from_f64(0.0, p);
    for (m, c) in x.terms() {
        let mut v = rat_to_bigfloat(c, p);
        let e = m.pi2_exponent();
        let pw = pi2.powi(e.unsigned_abs() as usize, p, ROUND);
        v = if e >= 0 {
            v.mul(&pw, p, ROUND)
        } else {
            v.div(&pw, p, ROUND)
        };
        for (z, k) in m.zeta_exponents() {
            let zv = riemann_zeta_numeric(*z, p);
            v = v.mul(&zv.powi(*k as usize, p, ROUND), p, ROUND);
        }
        acc = acc.add(&v, p, ROUND);
    }
    let mut out = acc;
    out.set_precision(prec.bits(), ROUND).expect("valid precision");
    BigComplex::from_real(out, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigcomplex::bigfloat_to_f64;

    #[test]
    fn zeta_three_and_two() {
        let z3 = bigfloat_to_f64(&riemann_zeta_numeric(3, 128));
        assert!((z3 - 1.202_056_903_159_594_2).abs() < 1e-15);
        let z2 = bigfloat_to_f64(&riemann_zeta_numeric(2, 128));
        assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
    }
}
