//! Exact rational helpers: constructors, binomials, Bernoulli numbers, and
//! `p/q` string conversion.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::NumError;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// Builds `num/den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)` for non-negative integers.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Central binomial coefficient `C(2j, j)`.
pub fn central_binomial(j: u64) -> BigUint {
    binomial(2 * j, j)
}

/// `C(-1/2, j) = (-1)^j C(2j, j) / 4^j`.
pub fn binom_neg_half(j: u64) -> Rat {
    let num = BigInt::from(central_binomial(j));
    let den = BigInt::one() << (2 * j as usize);
    let value = Rat::new(num, den);
    if j % 2 == 1 {
        -value
    } else {
        value
    }
}

/// `n!` as a big unsigned integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Odd double factorial `(2n+1)!! = 1·3·5···(2n+1)`.
pub fn odd_double_factorial(n: u64) -> BigUint {
    (0..=n).fold(BigUint::one(), |acc, i| acc * (2 * i + 1))
}

static BERNOULLI_CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
///
/// Computed from `sum_{j=0}^{n} C(n+1, j) B_j = 0` and memoized.
pub fn bernoulli_number(n: usize) -> Rat {
    let mut cache = BERNOULLI_CACHE.lock().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        if m > 1 && m % 2 == 1 {
            cache.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in cache.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += Rat::from_integer(BigInt::from(binomial(m as u64 + 1, j as u64))) * b;
        }
        cache.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
    }
    cache[n].clone()
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, NumError> {
    let bad = || NumError::Parse(s.to_string());
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Nearest `f64` to a rational, robust to huge numerators and denominators.
pub fn rat_to_f64(x: &Rat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num = x.numer().abs();
    let den = x.denom();
    let shift = num.bits() as i64 - den.bits() as i64;
    let k = 64 - shift;
    let quotient = if k >= 0 {
        (num << k as usize) / den
    } else {
        num / (den << (-k) as usize)
    };
    let mantissa = quotient.to_f64().unwrap_or(f64::NAN);
    let value = ldexp(mantissa, -k);
    if x.is_negative() {
        -value
    } else {
        value
    }
}

/// `m * 2^e` without intermediate overflow.
pub fn ldexp(mut m: f64, mut e: i64) -> f64 {
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
    }
    m * 2f64.powi(e as i32)
}

/// Exact power `x^e` for a signed exponent; `x` must be non-zero when `e < 0`.
pub fn rat_pow(x: &Rat, e: i32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Greatest common divisor of two non-negative integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `true` if the rational is an integer.
pub fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Absolute value.
pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(central_binomial(3), BigUint::from(20u32));
    }

    #[test]
    fn binom_neg_half_first_terms() {
        assert_eq!(binom_neg_half(0), rat(1, 1));
        assert_eq!(binom_neg_half(1), rat(-1, 2));
        assert_eq!(binom_neg_half(2), rat(3, 8));
        assert_eq!(binom_neg_half(3), rat(-5, 16));
    }

    #[test]
    fn rat_string_round_trip() {
        let x = rat(-41, 64);
        assert_eq!(rat_to_string(&x), "-41/64");
        assert_eq!(parse_rat("-41/64").unwrap(), x);
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn rat_to_f64_handles_huge_parts() {
        let big = Rat::new(BigInt::from(3) << 2000usize, BigInt::from(2) << 2000usize);
        assert!((rat_to_f64(&big) - 1.5).abs() < 1e-15);
        let tiny = Rat::new(BigInt::from(1), BigInt::from(7) << 100usize);
        assert!((rat_to_f64(&tiny) - 1.0 / 7.0 / 2f64.powi(100)).abs() < 1e-40);
    }
}
