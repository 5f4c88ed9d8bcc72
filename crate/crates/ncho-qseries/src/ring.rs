//! Coefficient rings for q-series: exact rationals and the formal-constant ring.

use num_traits::{One, Zero};

use ncho_numcore::{rat_to_string, FormalNumber, Rat};

/// Exact commutative ring usable as a q-series coefficient.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug + Zero + One + Send + Sync {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale_rat(&self, r: &Rat) -> Self;
    /// Inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;
    fn from_rat(r: Rat) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Coefficient for Rat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_rat(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(rat_to_string(self))
    }
}

impl Coefficient for FormalNumber {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }
    fn try_inv(&self) -> Option<Self> {
        FormalNumber::one().div_by_monomial(self).ok()
    }
    fn from_rat(r: Rat) -> Self {
        FormalNumber::from_rat(r)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("formal numbers serialize")
    }
}
