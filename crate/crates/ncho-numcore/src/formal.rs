//! The formal-constant ring: finite rational combinations of monomials in
//! `pi^2` (any integer power) and odd zeta values.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::NumError;
use crate::rational::{bernoulli_number, factorial, rat_to_string, Rat};

/// A monomial `pi^(2a) * prod zeta(m)^(e_m)` over odd `m >= 3`.
///
/// Zero exponents are never stored, so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ConstMonomial {
    pi2_exponent: i32,
    zeta_exponents: BTreeMap<u32, u32>,
}

impl ConstMonomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// `pi^(2a)`.
    pub fn pi2_pow(a: i32) -> Self {
        Self {
            pi2_exponent: a,
            zeta_exponents: BTreeMap::new(),
        }
    }

    /// `zeta(m)` for odd `m >= 3`.
    pub fn zeta(m: u32) -> Self {
        assert!(m >= 3 && m % 2 == 1, "zeta monomials are odd arguments >= 3");
        let mut zeta_exponents = BTreeMap::new();
        zeta_exponents.insert(m, 1);
        Self {
            pi2_exponent: 0,
            zeta_exponents,
        }
    }

    pub fn pi2_exponent(&self) -> i32 {
        self.pi2_exponent
    }

    pub fn zeta_exponents(&self) -> &BTreeMap<u32, u32> {
        &self.zeta_exponents
    }

    pub fn is_one(&self) -> bool {
        self.pi2_exponent == 0 && self.zeta_exponents.is_empty()
    }

    /// Weight: `2a + sum m * e_m`.
    pub fn weight(&self) -> i64 {
        2 * self.pi2_exponent as i64
            + self
                .zeta_exponents
                .iter()
                .map(|(m, e)| (*m as i64) * (*e as i64))
                .sum::<i64>()
    }

    fn times(&self, other: &Self) -> Self {
        let mut zeta_exponents = self.zeta_exponents.clone();
        for (m, e) in &other.zeta_exponents {
            *zeta_exponents.entry(*m).or_insert(0) += e;
        }
        Self {
            pi2_exponent: self.pi2_exponent + other.pi2_exponent,
            zeta_exponents,
        }
    }

    /// Inverse, available only when no zeta factor is present.
    fn inverse(&self) -> Option<Self> {
        self.zeta_exponents
            .is_empty()
            .then(|| Self::pi2_pow(-self.pi2_exponent))
    }
}

impl fmt::Display for ConstMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.pi2_exponent {
            0 => {}
            a => parts.push(format!("pi^{}", 2 * a)),
        }
        for (m, e) in &self.zeta_exponents {
            if *e == 1 {
                parts.push(format!("zeta({m})"));
            } else {
                parts.push(format!("zeta({m})^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl Serialize for ConstMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("pi2", &self.pi2_exponent)?;
        map.serialize_entry("zeta", &self.zeta_exponents)?;
        map.end()
    }
}

/// A finite `Q`-linear combination of [`ConstMonomial`]s with no zero
/// coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct FormalNumber {
    terms: BTreeMap<ConstMonomial, Rat>,
}

/// Operations accepted by [`formal_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormalOp {
    Add,
    Sub,
    Mul,
    DivByMonomial,
}

impl FormalNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    /// `c * m` for a single monomial.
    pub fn monomial(c: Rat, m: ConstMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(c, ConstMonomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// `pi^(2a)`.
    pub fn pi2_pow(a: i32) -> Self {
        Self::monomial(Rat::one(), ConstMonomial::pi2_pow(a))
    }

    /// `zeta(m)` for odd `m >= 3`.
    pub fn zeta_odd(m: u32) -> Self {
        Self::monomial(Rat::one(), ConstMonomial::zeta(m))
    }

    /// Riemann `zeta(k)` for `k >= 2`; even arguments become rational
    /// multiples of `pi^k`.
    pub fn riemann_zeta(k: u32) -> Result<Self, NumError> {
        if k < 2 {
            return Err(NumError::ZetaArgument(k as i64));
        }
        if k % 2 == 1 {
            return Ok(Self::zeta_odd(k));
        }
        // zeta(2m) = (-1)^(m+1) B_{2m} (2 pi)^{2m} / (2 (2m)!)
        let m = k / 2;
        let b = bernoulli_number(k as usize);
        let two_pow = Rat::from_integer(BigInt::one() << k as usize);
        let fact = Rat::from_integer(BigInt::from(factorial(k as u64)));
        let mut c = b * two_pow / (Rat::from_integer(BigInt::from(2)) * fact);
        if m % 2 == 0 {
            c = -c;
        }
        Ok(Self::monomial(c, ConstMonomial::pi2_pow(m as i32)))
    }

    pub fn terms(&self) -> &BTreeMap<ConstMonomial, Rat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &ConstMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The rational part, if the number has no transcendental monomials.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest monomial weight present (`None` for zero).
    pub fn max_weight(&self) -> Option<i64> {
        self.terms.keys().map(ConstMonomial::weight).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    fn add_term(&mut self, m: ConstMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Division by a single-term divisor.
    pub fn div_by_monomial(&self, divisor: &Self) -> Result<Self, NumError> {
        if divisor.terms.len() != 1 {
            return Err(if divisor.is_zero() {
                NumError::DivisionByZero
            } else {
                NumError::NonMonomialDivisor(divisor.terms.len())
            });
        }
        let (m, c) = divisor.terms.iter().next().expect("one term");
        let inv_m = m
            .inverse()
            .ok_or_else(|| NumError::NonInvertibleMonomial(m.to_string()))?;
        let inv_c = c.recip();
        let mut out = Self::zero();
        for (mm, cc) in &self.terms {
            out.add_term(mm.times(&inv_m), cc * &inv_c);
        }
        Ok(out)
    }
}

/// Exact formal arithmetic dispatch.
pub fn formal_arith(a: &FormalNumber, b: &FormalNumber, op: FormalOp) -> Result<FormalNumber, NumError> {
    Ok(match op {
        FormalOp::Add => a + b,
        FormalOp::Sub => a - b,
        FormalOp::Mul => a * b,
        FormalOp::DivByMonomial => a.div_by_monomial(b)?,
    })
}

/// Hurwitz value `zeta(k, 1/2) = (2^k - 1) zeta(k)`, with even `k` rewritten
/// as a rational multiple of `pi^k`.
pub fn zeta_half(k: i64) -> Result<FormalNumber, NumError> {
    if k < 2 {
        return Err(NumError::ZetaArgument(k));
    }
    let factor = Rat::from_integer((BigInt::one() << k as usize) - BigInt::one());
    Ok(FormalNumber::riemann_zeta(k as u32)?.scale(&factor))
}

impl From<Rat> for FormalNumber {
    fn from(c: Rat) -> Self {
        Self::from_rat(c)
    }
}

impl Add for &FormalNumber {
    type Output = FormalNumber;
    fn add(self, rhs: &FormalNumber) -> FormalNumber {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for FormalNumber {
    type Output = FormalNumber;
    fn add(mut self, rhs: FormalNumber) -> FormalNumber {
        self += &rhs;
        self
    }
}

impl AddAssign<&FormalNumber> for FormalNumber {
    fn add_assign(&mut self, rhs: &FormalNumber) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&FormalNumber> for FormalNumber {
    fn sub_assign(&mut self, rhs: &FormalNumber) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Sub for &FormalNumber {
    type Output = FormalNumber;
    fn sub(self, rhs: &FormalNumber) -> FormalNumber {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for FormalNumber {
    type Output = FormalNumber;
    fn sub(mut self, rhs: FormalNumber) -> FormalNumber {
        self -= &rhs;
        self
    }
}

impl Neg for &FormalNumber {
    type Output = FormalNumber;
    fn neg(self) -> FormalNumber {
        FormalNumber {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for FormalNumber {
    type Output = FormalNumber;
    fn neg(self) -> FormalNumber {
        -&self
    }
}

impl Mul for &FormalNumber {
    type Output = FormalNumber;
    fn mul(self, rhs: &FormalNumber) -> FormalNumber {
        let mut out = FormalNumber::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for FormalNumber {
    type Output = FormalNumber;
    fn mul(self, rhs: FormalNumber) -> FormalNumber {
        &self * &rhs
    }
}

impl Zero for FormalNumber {
    fn zero() -> Self {
        FormalNumber::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for FormalNumber {
    fn one() -> Self {
        FormalNumber::one()
    }
}

impl fmt::Display for FormalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    rat_to_string(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{}*{}", rat_to_string(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for FormalNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            monomial: &'a ConstMonomial,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term {
                coeff: rat_to_string(c),
                monomial: m,
            })?;
        }
        seq.end()
    }
}
