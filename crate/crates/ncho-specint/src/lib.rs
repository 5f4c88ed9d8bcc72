//! Exact determinant identities over the Gaussian rationals and numerical
//! special values of the spectral zeta function of the non-commutative
//! harmonic oscillator.

mod den;
mod error;
mod gauss;
mod matrix;
mod quad;
mod zeta;

pub use den::{c_factor, den_direct, den_expand, den_expand_check, den_terms, quartic_gaps, vk, vn_check, vn_closed};
pub use error::SpecintError;
pub use gauss::GaussRat;
pub use matrix::{delta, det_exact, ldu, perturbed, xi, CycMatrix, LduFactors};
pub use quad::{compositions, r1_quad, r1_series, r2_quad, QuadConfig, QuadEstimate, QuadMethod, SeriesSum};
pub use zeta::{r21_closed, zeta_q, zeta_q2_closed, zeta_q_degenerate, ZetaEstimate};
