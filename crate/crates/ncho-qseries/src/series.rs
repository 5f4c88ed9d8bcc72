//! Truncated q-expansions `sum_n c_n q^{n/N}` with explicit validity order.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use ncho_numcore::{rat, Rat};

use crate::error::QSeriesError;
use crate::ring::Coefficient;

/// A q-series whose coefficients are known exactly for exponents
/// `n / denom` with `0 <= n < coeffs.len()`. Everything beyond is unknown.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries<R> {
    denom: u32,
    coeffs: Vec<R>,
}

pub type RatSeries = QSeries<Rat>;

impl<R: Coefficient> QSeries<R> {
    /// Series from raw coefficients on the `1/denom` grid.
    pub fn new(denom: u32, coeffs: Vec<R>) -> Self {
        assert!(denom >= 1, "exponent denominator must be positive");
        Self { denom, coeffs }
    }

    pub fn from_fn(denom: u32, len: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::new(denom, (0..len).map(f).collect())
    }

    pub fn zero(denom: u32, len: usize) -> Self {
        Self::new(denom, vec![R::zero(); len])
    }

    pub fn one(denom: u32, len: usize) -> Self {
        let mut s = Self::zero(denom, len);
        if len > 0 {
            s.coeffs[0] = R::one();
        }
        s
    }

    /// `c q^{index/denom}` valid up to `len` grid steps.
    pub fn monomial(denom: u32, index: usize, c: R, len: usize) -> Self {
        let mut s = Self::zero(denom, len);
        if index < len {
            s.coeffs[index] = c;
        }
        s
    }

    /// Exponent denominator `N`.
    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// Number of known grid coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent bound `len / N`: coefficients are known for all exponents below it.
    pub fn order(&self) -> Rat {
        rat(self.len() as i64, self.denom as i64)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, or `None` beyond the valid order or off the grid.
    pub fn coeff(&self, e: &Rat) -> Option<R> {
        let scaled = e * rat(self.denom as i64, 1);
        if !scaled.is_integer() || scaled.is_negative() {
            return if scaled.is_negative() { Some(R::zero()) } else { None };
        }
        let idx = scaled.to_integer().to_usize()?;
        if idx < self.len() {
            Some(self.coeffs[idx].clone())
        } else {
            None
        }
    }

    /// Coefficient of `q^{num/den}` for small exponents.
    pub fn coeff_at(&self, num: i64, den: i64) -> Option<R> {
        self.coeff(&rat(num, den))
    }

    /// Grid index of the first non-zero coefficient; `len` for the zero series.
    pub fn valuation_index(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.len())
    }

    /// Exponent of the first non-zero coefficient.
    pub fn valuation(&self) -> Option<Rat> {
        let v = self.valuation_index();
        (v < self.len()).then(|| rat(v as i64, self.denom as i64))
    }

    /// Same series on the finer grid `1/(N g)`.
    pub fn refine(&self, g: u32) -> Self {
        if g == 1 {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); self.len() * g as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * g as usize] = c.clone();
        }
        Self::new(self.denom * g, coeffs)
    }

    /// Refines to denominator `target`, a multiple of the current one.
    pub fn with_denom(&self, target: u32) -> Self {
        assert_eq!(target % self.denom, 0, "target denominator must be a multiple");
        self.refine(target / self.denom)
    }

    /// Smallest grid carrying all non-zero coefficients.
    pub fn coarsen(&self) -> Self {
        let mut g = self.denom;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&(i as u32));
            }
            if g == 1 {
                return self.clone();
            }
        }
        // every exponent below len/N is on the coarse grid, including zeros
        let new_len = self.len().div_ceil(g as usize);
        let coeffs = (0..new_len).map(|i| self.coeffs[i * g as usize].clone()).collect();
        Self::new(self.denom / g, coeffs)
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        let l = self.denom.lcm(&other.denom);
        (self.with_denom(l), other.with_denom(l))
    }

    /// Keeps at most `len` grid coefficients.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.denom, self.coeffs.iter().take(len).cloned().collect())
    }

    /// Keeps exponents below `order`.
    pub fn truncate_order(&self, order: &Rat) -> Self {
        let len = (order * rat(self.denom as i64, 1)).ceil().to_integer();
        self.truncate(len.to_usize().unwrap_or(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        let len = a.len().min(b.len());
        Self::from_fn(a.denom, len, |i| a.coeffs[i].add_ref(&b.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        let len = a.len().min(b.len());
        Self::from_fn(a.denom, len, |i| a.coeffs[i].sub_ref(&b.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.denom, self.coeffs.iter().map(R::neg_ref).collect())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.denom, self.coeffs.iter().map(|c| c.scale_rat(r)).collect())
    }

    pub fn scale_by(&self, c: &R) -> Self {
        Self::new(self.denom, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Adds the constant `c`.
    pub fn add_constant(&self, c: &R) -> Self {
        let mut out = self.clone();
        if let Some(first) = out.coeffs.first_mut() {
            *first = first.add_ref(c);
        }
        out
    }

    /// Product, valid to `min(o1 + v2, o2 + v1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        let (va, vb) = (a.valuation_index(), b.valuation_index());
        let len = (a.len() + vb).min(b.len() + va);
        let mut out = vec![R::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
                }
            }
        }
        Self::new(a.denom, out)
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inv(&self) -> Result<Self, QSeriesError> {
        let lead = self.coeffs.first().ok_or(QSeriesError::OrderUnderflow)?;
        let lead_inv = lead.try_inv().ok_or(QSeriesError::NotInvertible)?;
        let len = self.len();
        let mut out: Vec<R> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for n in 1..len {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add_ref(&self.coeffs[k].mul_ref(&out[n - k]));
                }
            }
            out.push(acc.mul_ref(&lead_inv).neg_ref());
        }
        Ok(Self::new(self.denom, out))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QSeriesError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Non-negative power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.denom, self.len());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power, negative exponents through `inv`.
    pub fn powi(&self, e: i32) -> Result<Self, QSeriesError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// `tau -> c tau`, i.e. `q^{n/N} -> q^{c n/N}` for positive rational `c`.
    pub fn scale_tau(&self, c: &Rat) -> Result<Self, QSeriesError> {
        if !c.is_positive() {
            return Err(QSeriesError::InvalidArgument("scale_tau needs c > 0".into()));
        }
        let a = c.numer().to_usize().ok_or_else(|| QSeriesError::InvalidArgument("c too large".into()))?;
        let b = c.denom().to_u32().ok_or_else(|| QSeriesError::InvalidArgument("c too large".into()))?;
        let len = self.len() * a;
        let mut coeffs = vec![R::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            coeffs[i * a] = x.clone();
        }
        Ok(Self::new(self.denom * b, coeffs).coarsen())
    }

    /// Multiplication by `q^e`; `e` may be negative when the valuation allows.
    pub fn shift(&self, e: &Rat) -> Result<Self, QSeriesError> {
        let d = e.denom().to_u32().ok_or_else(|| QSeriesError::InvalidArgument("shift".into()))?;
        let base = self.with_denom(self.denom.lcm(&d));
        let steps = (e * rat(base.denom as i64, 1)).to_integer().to_i64().expect("small shift");
        if steps >= 0 {
            let mut coeffs = vec![R::zero(); steps as usize];
            coeffs.extend(base.coeffs);
            Ok(Self::new(base.denom, coeffs))
        } else {
            let drop = (-steps) as usize;
            if base.valuation_index() < drop {
                return Err(QSeriesError::InvalidArgument("shift below exponent zero".into()));
            }
            Ok(Self::new(base.denom, base.coeffs[drop..].to_vec()))
        }
    }

    /// `int_0^q g dq/q`: `c_n q^{n/N} -> (N/n) c_n q^{n/N}`.
    pub fn q_integrate(&self) -> Result<Self, QSeriesError> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(QSeriesError::NonZeroConstant);
        }
        let n = self.denom as i64;
        Ok(Self::from_fn(self.denom, self.len(), |i| {
            if i == 0 {
                R::zero()
            } else {
                self.coeffs[i].scale_rat(&rat(n, i as i64))
            }
        }))
    }

    /// `q d/dq`: `c_n q^{n/N} -> (n/N) c_n q^{n/N}`.
    pub fn theta_q(&self) -> Self {
        let n = self.denom as i64;
        Self::from_fn(self.denom, self.len(), |i| self.coeffs[i].scale_rat(&rat(i as i64, n)))
    }

    /// `sum_n outer[n] inner^n`, treating `outer` as a polynomial. A truncated
    /// power series must therefore carry enough terms to cover the inner order.
    /// Powers of `inner` are built incrementally so that integral inner series
    /// stay in cheap integer arithmetic.
    pub fn compose(outer: &[R], inner: &Self) -> Result<Self, QSeriesError> {
        if inner.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(QSeriesError::NonZeroConstant);
        }
        let len = inner.len();
        let v = inner.valuation_index().max(1);
        let mut out = vec![R::zero(); len];
        let mut power = Self::one(inner.denom, len);
        for (n, a) in outer.iter().enumerate() {
            if n > 0 {
                if n * v >= len {
                    break;
                }
                power = power.mul(inner).truncate(len);
            }
            if a.is_zero() {
                continue;
            }
            for (slot, c) in out.iter_mut().zip(&power.coeffs).skip(n * v) {
                if !c.is_zero() {
                    *slot = slot.add_ref(&a.mul_ref(c));
                }
            }
        }
        Ok(Self::new(inner.denom, out))
    }

    /// Substitution `tau -> (tau + 1)/2` on an integer-exponent series,
    /// i.e. `q^n -> (-1)^n q^{n/2}`.
    pub fn half_shift(&self) -> Result<Self, QSeriesError> {
        if self.denom != 1 {
            return Err(QSeriesError::FractionalExponents(self.denom));
        }
        let signed = Self::from_fn(1, self.len(), |i| {
            if i % 2 == 1 {
                self.coeffs[i].neg_ref()
            } else {
                self.coeffs[i].clone()
            }
        });
        signed.scale_tau(&rat(1, 2))
    }

    /// First exponent where the two series differ, within the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<Rat> {
        let (a, b) = self.unified(other);
        let len = a.len().min(b.len());
        (0..len)
            .find(|&i| a.coeffs[i] != b.coeffs[i])
            .map(|i| rat(i as i64, a.denom as i64))
    }

    /// Equality of all coefficients within the common order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Dump as `{N, order, coeffs}` with exponents in increasing order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.denom,
            "order": self.len(),
            "coeffs": self.coeffs.iter().map(R::to_json).collect::<Vec<_>>(),
        })
    }

    /// Maps coefficients into another ring.
    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries::new(self.denom, self.coeffs.iter().map(f).collect())
    }
}

impl QSeries<Rat> {
    /// Lifts a rational series into the formal-constant ring.
    pub fn to_formal(&self) -> QSeries<ncho_numcore::FormalNumber> {
        self.map(|c| ncho_numcore::FormalNumber::from_rat(c.clone()))
    }
}

/// Number of grid steps for exponents below `order` on the `1/denom` grid.
pub fn grid_len(order: u32, denom: u32) -> usize {
    order as usize * denom as usize
}
