use ncho_numcore::{BigComplex, Precision};

use crate::error::AnalyticError;

/// A point of the upper half plane.
#[derive(Debug, Clone)]
pub struct UhpPoint(BigComplex);

impl UhpPoint {
    pub fn new(tau: BigComplex) -> Result<Self, AnalyticError> {
        if tau.im_f64() > 0.0 {
            Ok(Self(tau))
        } else {
            Err(AnalyticError::NotInUpperHalfPlane(tau.to_string()))
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: Precision) -> Result<Self, AnalyticError> {
        Self::new(BigComplex::from_f64(re, im, prec))
    }

    pub fn tau(&self) -> &BigComplex {
        &self.0
    }

    pub fn precision(&self) -> Precision {
        self.0.precision()
    }

    pub fn im_f64(&self) -> f64 {
        self.0.im_f64()
    }

    /// Image under `tau -> -1/tau`.
    pub fn s_image(&self) -> Self {
        Self(-self.0.recip())
    }

    /// `exp(2 pi i tau / denom)`.
    pub fn nome(&self, denom: u32) -> BigComplex {
        let p = self.precision();
        let two_pi_i = BigComplex::pi(p).mul_i().scale_rat(&ncho_numcore::rat(2, denom as i64));
        (&two_pi_i * &self.0).exp()
    }
}
