//! Precision-configurable complex floats on top of `astro-float`.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::Zero;

use crate::error::NumError;
use crate::rational::{ldexp, Rat};

pub(crate) const ROUND: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision in bits, at least 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(usize);

impl Precision {
    pub fn new(bits: usize) -> Result<Self, NumError> {
        if bits < 64 {
            Err(NumError::PrecisionTooLow(bits))
        } else {
            Ok(Self(bits))
        }
    }

    pub fn bits(self) -> usize {
        self.0
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self(DEFAULT_PRECISION)
    }
}

/// Sign flip without consuming the operand.
pub fn negate(x: &BigFloat) -> BigFloat {
    BigFloat::neg(x)
}

/// Nearest `f64` to a big float.
pub fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let (words, _, sign, exponent, _) = x.as_raw_parts().expect("finite big float");
    let top = *words.last().expect("non-empty mantissa") as f64;
    let magnitude = ldexp(top, exponent as i64 - 64);
    if sign == Sign::Neg {
        -magnitude
    } else {
        magnitude
    }
}

/// Exact conversion of a big integer (rounded to `bits`).
pub fn bigint_to_bigfloat(n: &BigInt, bits: usize) -> BigFloat {
    let (sign, digits) = n.to_u64_digits();
    let work = bits + 64 * digits.len() + 64;
    let radix = BigFloat::from_u64(1, 64).mul(&BigFloat::from_u64(1 << 32, 64), 64, ROUND);
    let radix = radix.mul(&BigFloat::from_u64(1 << 32, 64), 128, ROUND);
    let mut acc = BigFloat::from_u64(0, work);
    for d in digits.iter().rev() {
        acc = acc.mul(&radix, work, ROUND).add(&BigFloat::from_u64(*d, 64), work, ROUND);
    }
    if sign == IntSign::Minus {
        acc = negate(&acc);
    }
    let mut out = acc;
    out.set_precision(bits, ROUND).expect("valid precision");
    out
}

/// Rational rounded to a big float of the given precision.
pub fn rat_to_bigfloat(x: &Rat, bits: usize) -> BigFloat {
    let num = bigint_to_bigfloat(x.numer(), bits + 32);
    let den = bigint_to_bigfloat(x.denom(), bits + 32);
    num.div(&den, bits, ROUND)
}

/// `pi` at the given precision.
pub fn pi_bigfloat(bits: usize) -> BigFloat {
    with_consts(|cc| cc.pi(bits, ROUND))
}

/// A complex number with big-float parts and an explicit working precision.
#[derive(Clone)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: Precision,
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigComplex({} + {}i @{} bits)", self.re, self.im, self.prec.0)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec.0 as f64 * std::f64::consts::LOG10_2) as usize;
        write!(
            f,
            "{} + {}i",
            format_decimal(&self.re, digits),
            format_decimal(&self.im, digits)
        )
    }
}

/// Decimal rendering with roughly `digits` significant figures.
pub fn format_decimal(x: &BigFloat, digits: usize) -> String {
    let full = with_consts(|cc| x.format(Radix::Dec, ROUND, cc)).unwrap_or_else(|_| "NaN".into());
    match full.split_once('e') {
        Some((mant, exp)) if mant.len() > digits + 2 => format!("{}e{}", &mant[..digits + 2], exp),
        _ => full,
    }
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, prec: Precision) -> Self {
        Self { re, im, prec }
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_f64(1.0, 0.0, prec)
    }

    /// The imaginary unit.
    pub fn i(prec: Precision) -> Self {
        Self::from_f64(0.0, 1.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: Precision) -> Self {
        Self {
            re: BigFloat::from_f64(re, prec.0),
            im: BigFloat::from_f64(im, prec.0),
            prec,
        }
    }

    pub fn from_real(re: BigFloat, prec: Precision) -> Self {
        Self {
            re,
            im: BigFloat::from_f64(0.0, prec.0),
            prec,
        }
    }

    pub fn from_rat(x: &Rat, prec: Precision) -> Self {
        Self::from_real(rat_to_bigfloat(x, prec.0), prec)
    }

    pub fn from_rat_pair(re: &Rat, im: &Rat, prec: Precision) -> Self {
        Self {
            re: rat_to_bigfloat(re, prec.0),
            im: rat_to_bigfloat(im, prec.0),
            prec,
        }
    }

    pub fn from_int(n: i64, prec: Precision) -> Self {
        Self::from_real(BigFloat::from_i64(n, prec.0), prec)
    }

    /// `pi` as a real complex number.
    pub fn pi(prec: Precision) -> Self {
        Self::from_real(pi_bigfloat(prec.0), prec)
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn re_f64(&self) -> f64 {
        bigfloat_to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        bigfloat_to_f64(&self.im)
    }

    fn join(&self, other: &Self) -> usize {
        self.prec.0.max(other.prec.0)
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: negate(&self.im),
            prec: self.prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.prec.0;
        self.re
            .mul(&self.re, p, ROUND)
            .add(&self.im.mul(&self.im, p, ROUND), p, ROUND)
    }

    /// `|z|` as a big float.
    pub fn abs_big(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.prec.0, ROUND)
    }

    /// `|z|` rounded to `f64`.
    pub fn abs_f64(&self) -> f64 {
        bigfloat_to_f64(&self.abs_big())
    }

    /// Multiplication by a rational.
    pub fn scale_rat(&self, c: &Rat) -> Self {
        let p = self.prec.0;
        let c = rat_to_bigfloat(c, p);
        Self {
            re: self.re.mul(&c, p, ROUND),
            im: self.im.mul(&c, p, ROUND),
            prec: self.prec,
        }
    }

    /// Multiplication by a real big float.
    pub fn scale_real(&self, c: &BigFloat) -> Self {
        let p = self.prec.0;
        Self {
            re: self.re.mul(c, p, ROUND),
            im: self.im.mul(c, p, ROUND),
            prec: self.prec,
        }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self {
            re: negate(&self.im),
            im: self.re.clone(),
            prec: self.prec,
        }
    }

    pub fn recip(&self) -> Self {
        Self::one(self.prec) / self
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec);
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Complex exponential.
    pub fn exp(&self) -> Self {
        let p = self.prec.0;
        with_consts(|cc| {
            let mag = self.re.exp(p, ROUND, cc);
            let c = self.im.cos(p, ROUND, cc);
            let s = self.im.sin(p, ROUND, cc);
            Self {
                re: mag.mul(&c, p, ROUND),
                im: mag.mul(&s, p, ROUND),
                prec: self.prec,
            }
        })
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> BigFloat {
        let p = self.prec.0;
        with_consts(|cc| {
            let pi = cc.pi(p, ROUND);
            if self.re.is_zero() {
                let half = pi.div(&BigFloat::from_u64(2, p), p, ROUND);
                return if self.im.is_negative() { negate(&half) } else if self.im.is_zero() { BigFloat::from_f64(0.0, p) } else { half };
            }
            let base = self.im.div(&self.re, p, ROUND).atan(p, ROUND, cc);
            if self.re.is_positive() {
                base
            } else if self.im.is_negative() {
                base.sub(&pi, p, ROUND)
            } else {
                base.add(&pi, p, ROUND)
            }
        })
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec.0;
        let mag = with_consts(|cc| self.abs_big().ln(p, ROUND, cc));
        Self {
            re: mag,
            im: self.arg(),
            prec: self.prec,
        }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec.0;
        let two = BigFloat::from_u64(2, p);
        let r = self.abs_big();
        let re = r.add(&self.re, p, ROUND).div(&two, p, ROUND).sqrt(p, ROUND);
        let mut im = r.sub(&self.re, p, ROUND).div(&two, p, ROUND).sqrt(p, ROUND);
        if self.im.is_negative() {
            im = negate(&im);
        }
        Self { re, im, prec: self.prec }
    }

    /// Principal power `z^w = exp(w ln z)`.
    pub fn pow(&self, w: &Self) -> Self {
        if self.is_zero() {
            return Self::zero(self.prec);
        }
        (w * &self.ln()).exp()
    }

    /// `true` if `|self - other| <= tol`.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs_f64() <= tol
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        let p = self.join(rhs);
        BigComplex {
            re: self.re.add(&rhs.re, p, ROUND),
            im: self.im.add(&rhs.im, p, ROUND),
            prec: Precision(p),
        }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        let p = self.join(rhs);
        BigComplex {
            re: self.re.sub(&rhs.re, p, ROUND),
            im: self.im.sub(&rhs.im, p, ROUND),
            prec: Precision(p),
        }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    // the `+` adds guard bits to the working precision
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let p = self.join(rhs);
        let w = p + 32;
        let ac = self.re.mul(&rhs.re, w, ROUND);
        let bd = self.im.mul(&rhs.im, w, ROUND);
        let ad = self.re.mul(&rhs.im, w, ROUND);
        let bc = self.im.mul(&rhs.re, w, ROUND);
        BigComplex {
            re: ac.sub(&bd, p, ROUND),
            im: ad.add(&bc, p, ROUND),
            prec: Precision(p),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let p = self.join(rhs);
        let w = p + 32;
        let den = rhs
            .re
            .mul(&rhs.re, w, ROUND)
            .add(&rhs.im.mul(&rhs.im, w, ROUND), w, ROUND);
        let num = self * &rhs.conj();
        BigComplex {
            re: num.re.div(&den, p, ROUND),
            im: num.im.div(&den, p, ROUND),
            prec: Precision(p),
        }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: negate(&self.re),
            im: negate(&self.im),
            prec: self.prec,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &BigComplex) -> BigComplex {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

/// `true` when a rational is zero; exported for callers that mix exact and
/// float arithmetic.
pub fn rat_is_zero(x: &Rat) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn prec() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn precision_floor_is_enforced() {
        assert_eq!(Precision::new(32), Err(NumError::PrecisionTooLow(32)));
    }

    #[test]
    fn rational_conversion() {
        let x = BigComplex::from_rat(&rat(-41, 64), prec());
        assert!((x.re_f64() + 41.0 / 64.0).abs() < 1e-16);
        let big = BigInt::from(3u64) << 300usize;
        let b = bigint_to_bigfloat(&big, 128);
        let approx = bigfloat_to_f64(&b) / 2f64.powi(300);
        assert!((approx - 3.0).abs() < 1e-14);
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let z = BigComplex::pi(prec()).mul_i().exp();
        assert!(z.close_to(&BigComplex::from_int(-1, prec()), 1e-35));
    }

    #[test]
    fn sqrt_and_ln_principal_branches() {
        let minus_four = BigComplex::from_int(-4, prec());
        let root = minus_four.sqrt();
        assert!(root.close_to(&BigComplex::from_f64(0.0, 2.0, prec()), 1e-35));
        let l = BigComplex::from_f64(0.0, -1.0, prec()).ln();
        assert!((l.im_f64() + std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let back = BigComplex::from_f64(-3.0, 0.5, prec()).ln().exp();
        assert!(back.close_to(&BigComplex::from_f64(-3.0, 0.5, prec()), 1e-33));
    }

    #[test]
    fn precision_is_not_downgraded() {
        let a = BigComplex::one(Precision::new(64).unwrap());
        let b = BigComplex::one(Precision::new(320).unwrap());
        assert_eq!((&a + &b).precision().bits(), 320);
        assert_eq!((&a * &b).precision().bits(), 320);
    }
}
