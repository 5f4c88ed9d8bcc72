//! Truncated p-adic numbers with explicit valuation and relative precision.
//!
//! A non-zero value is `p^valuation * unit` where `unit` is known modulo
//! `p^precision`; a zero value only records the absolute precision to which
//! it is known to vanish. Arithmetic propagates precision conservatively, so
//! every reported residue is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use ncho_numcore::Rat;

use crate::error::CongruenceError;

/// `true` for 3, 5, 7, ...
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<(), CongruenceError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(CongruenceError::NotOddPrime(p))
    }
}

/// `p^e`, or `None` on overflow.
pub fn checked_prime_power(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// Largest `K` with `p^K < 2^63`; the working relative precision.
pub fn max_precision(p: u64) -> u32 {
    let mut k = 0;
    let mut acc: u64 = 1;
    while let Some(next) = acc.checked_mul(p) {
        if next >= 1 << 63 {
            break;
        }
        acc = next;
        k += 1;
    }
    k
}

/// Exact p-adic valuation of a non-zero rational.
pub fn ordp(x: &Rat, p: u64) -> Result<i64, CongruenceError> {
    require_odd_prime(p)?;
    if x.is_zero() {
        return Err(CongruenceError::ZeroValuation);
    }
    Ok(int_ordp(x.numer(), p) as i64 - int_ordp(x.denom(), p) as i64)
}

pub(crate) fn int_ordp(x: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut x = x.abs();
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() || q.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// `x mod p^n` in `[0, p^n)` for a p-integral rational.
pub fn residue(x: &Rat, p: u64, n: u32) -> Result<u64, CongruenceError> {
    require_odd_prime(p)?;
    let modulus = checked_prime_power(p, n).ok_or(CongruenceError::ModulusTooLarge { p, exponent: n })?;
    if x.is_zero() {
        return Ok(0);
    }
    let v = ordp(x, p)?;
    if v < 0 {
        return Err(CongruenceError::NotPIntegral { p, ordp: v });
    }
    let m = BigInt::from(modulus);
    let num = x.numer().mod_floor(&m).to_u64().expect("reduced");
    let den = x.denom().mod_floor(&m).to_u64().expect("reduced");
    Ok(mul_mod(num, inv_mod(den, modulus), modulus))
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of a unit modulo `m`.
pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible mod {m}");
    old_s.rem_euclid(m as i128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Repr {
    Zero { absolute_precision: i64 },
    Unit { valuation: i64, unit: u64, precision: u32 },
}

/// Element of `Q_p` known to finite precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PAdic {
    p: u64,
    #[serde(flatten)]
    repr: Repr,
}

impl PAdic {
    /// Exact zero, stored with the given absolute precision.
    pub fn zero(p: u64, absolute_precision: i64) -> Self {
        Self {
            p,
            repr: Repr::Zero { absolute_precision },
        }
    }

    /// `p^valuation * unit`; `unit` is reduced modulo `p^precision` and must be prime to `p`.
    pub fn from_parts(p: u64, valuation: i64, unit: u64, precision: u32) -> Self {
        let modulus = p.pow(precision);
        let unit = unit % modulus;
        debug_assert!(unit % p != 0, "unit part divisible by p");
        Self {
            p,
            repr: Repr::Unit {
                valuation,
                unit,
                precision,
            },
        }
    }

    /// A non-zero integer to relative precision `precision`.
    pub fn from_i64(p: u64, x: i64, precision: u32) -> Self {
        if x == 0 {
            return Self::zero(p, i64::MAX / 4);
        }
        let mut v = 0;
        let mut a = x.unsigned_abs();
        while a % p == 0 {
            a /= p;
            v += 1;
        }
        let modulus = p.pow(precision);
        let mut unit = a % modulus;
        if x < 0 {
            unit = (modulus - unit) % modulus;
        }
        Self::from_parts(p, v, unit, precision)
    }

    pub fn from_rat(x: &Rat, p: u64, precision: u32) -> Result<Self, CongruenceError> {
        require_odd_prime(p)?;
        if x.is_zero() {
            return Ok(Self::zero(p, i64::MAX / 4));
        }
        let modulus = checked_prime_power(p, precision).ok_or(CongruenceError::ModulusTooLarge {
            p,
            exponent: precision,
        })?;
        let v = ordp(x, p)?;
        let pb = BigInt::from(p);
        let strip = |z: &BigInt| {
            let mut z = z.clone();
            while (&z % &pb).is_zero() {
                z /= &pb;
            }
            z.mod_floor(&BigInt::from(modulus)).to_u64().expect("reduced")
        };
        let unit = mul_mod(strip(x.numer()), inv_mod(strip(x.denom()), modulus), modulus);
        Ok(Self::from_parts(p, v, unit, precision))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    /// Valuation of a non-zero value.
    pub fn valuation(&self) -> Option<i64> {
        match self.repr {
            Repr::Unit { valuation, .. } => Some(valuation),
            Repr::Zero { .. } => None,
        }
    }

    /// Unit part and its precision, for non-zero values.
    pub fn unit(&self) -> Option<(u64, u32)> {
        match self.repr {
            Repr::Unit { unit, precision, .. } => Some((unit, precision)),
            Repr::Zero { .. } => None,
        }
    }

    /// Exponent `a` such that the value is known modulo `p^a`.
    pub fn absolute_precision(&self) -> i64 {
        match self.repr {
            Repr::Zero { absolute_precision } => absolute_precision,
            Repr::Unit {
                valuation, precision, ..
            } => valuation + precision as i64,
        }
    }

    /// Multiplication by `p^e`.
    pub fn shift(self, e: i64) -> Self {
        let repr = match self.repr {
            Repr::Zero { absolute_precision } => Repr::Zero {
                absolute_precision: absolute_precision.saturating_add(e),
            },
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => Repr::Unit {
                valuation: valuation + e,
                unit,
                precision,
            },
        };
        Self { p: self.p, repr }
    }

    pub fn neg(self) -> Self {
        match self.repr {
            Repr::Zero { .. } => self,
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => {
                let modulus = self.p.pow(precision);
                Self::from_parts(self.p, valuation, modulus - unit, precision)
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        match (self.repr, other.repr) {
            (Repr::Zero { absolute_precision: a }, Repr::Zero { absolute_precision: b }) => {
                Self::zero(self.p, a.saturating_add(b))
            }
            (Repr::Zero { absolute_precision: a }, Repr::Unit { valuation, .. })
            | (Repr::Unit { valuation, .. }, Repr::Zero { absolute_precision: a }) => {
                Self::zero(self.p, a.saturating_add(valuation))
            }
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                    precision: pa,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                    precision: pb,
                },
            ) => {
                let precision = pa.min(pb);
                let modulus = self.p.pow(precision);
                Self::from_parts(self.p, va + vb, mul_mod(ua % modulus, ub % modulus, modulus), precision)
            }
        }
    }

    /// Multiplicative inverse of a non-zero value.
    pub fn inverse(&self) -> Option<Self> {
        match self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit {
                valuation,
                unit,
                precision,
            } => Some(Self::from_parts(
                self.p,
                -valuation,
                inv_mod(unit, self.p.pow(precision)),
                precision,
            )),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let abs = self.absolute_precision().min(other.absolute_precision());
        let (va, ua) = match self.repr {
            Repr::Unit { valuation, unit, .. } if valuation < abs => (valuation, unit),
            _ => return other.truncate(abs),
        };
        let (vb, ub) = match other.repr {
            Repr::Unit { valuation, unit, .. } if valuation < abs => (valuation, unit),
            _ => return self.truncate(abs),
        };
        let base = va.min(vb);
        let width = (abs - base) as u32;
        let modulus = self.p.pow(width);
        let lift = |v: i64, u: u64| mul_mod(u % modulus, self.p.pow((v - base) as u32) % modulus, modulus);
        let sum = (lift(va, ua) as u128 + lift(vb, ub) as u128) % modulus as u128;
        let mut sum = sum as u64;
        if sum == 0 {
            return Self::zero(self.p, abs);
        }
        let mut valuation = base;
        while sum % self.p == 0 {
            sum /= self.p;
            valuation += 1;
        }
        Self::from_parts(self.p, valuation, sum, (abs - valuation) as u32)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// The same value known only modulo `p^abs`.
    fn truncate(&self, abs: i64) -> Self {
        match self.repr {
            Repr::Zero { absolute_precision } => Self::zero(self.p, absolute_precision.min(abs)),
            Repr::Unit {
                valuation, unit, precision,
            } => {
                if valuation >= abs {
                    return Self::zero(self.p, abs);
                }
                let keep = ((abs - valuation) as u32).min(precision);
                Self::from_parts(self.p, valuation, unit, keep)
            }
        }
    }

    /// Whether the value is `0 mod p^n`; `None` when precision does not decide.
    pub fn vanishes_mod(&self, n: i64) -> Option<bool> {
        match self.repr {
            Repr::Zero { absolute_precision } => (absolute_precision >= n).then_some(true),
            Repr::Unit { valuation, .. } => Some(valuation >= n),
        }
    }

    /// Residue modulo `p^n` of a p-integral value.
    pub fn residue(&self, n: u32) -> Result<u64, CongruenceError> {
        let modulus = checked_prime_power(self.p, n).ok_or(CongruenceError::ModulusTooLarge {
            p: self.p,
            exponent: n,
        })?;
        if self.absolute_precision() < n as i64 {
            return Err(CongruenceError::PrecisionExhausted {
                available: self.absolute_precision(),
                needed: n as i64,
            });
        }
        match self.repr {
            Repr::Zero { .. } => Ok(0),
            Repr::Unit { valuation, unit, .. } => {
                if valuation < 0 {
                    return Err(CongruenceError::NotPIntegral {
                        p: self.p,
                        ordp: valuation,
                    });
                }
                if valuation >= n as i64 {
                    return Ok(0);
                }
                Ok(mul_mod(unit % modulus, self.p.pow(valuation as u32), modulus))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncho_numcore::rat;

    #[test]
    fn add_tracks_cancellation() {
        let p = 5;
        let a = PAdic::from_rat(&rat(1, 3), p, 6).unwrap();
        let b = PAdic::from_rat(&rat(-1, 3), p, 6).unwrap();
        let s = a.add(&b);
        assert!(s.is_zero());
        assert_eq!(s.absolute_precision(), 6);
        let c = PAdic::from_rat(&rat(26, 1), p, 6).unwrap().sub(&PAdic::from_i64(p, 1, 6));
        assert_eq!(c.valuation(), Some(2));
        assert_eq!(c.residue(3).unwrap(), 25);
    }

    #[test]
    fn primes() {
        assert!(is_odd_prime(3) && is_odd_prime(47) && !is_odd_prime(2) && !is_odd_prime(49));
        assert_eq!(max_precision(3), 39);
    }
}
