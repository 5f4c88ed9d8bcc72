//! Apéry-like numbers attached to the spectral zeta function of the
//! non-commutative harmonic oscillator.
//!
//! Normalized values `J~_k(n)` are exact rationals built by a three-term
//! recurrence cascading in `k`, or from nested harmonic-type sums. The
//! numbers `J_k(n)` themselves live in the formal-constant ring of
//! `ncho-numcore`; two floating-point routes cross-check them.

pub mod error;
pub mod formal;
pub mod numeric;
pub mod params;
pub mod tables;
pub mod zsums;

pub use error::AperyError;
pub use formal::{
    binomial_transform, j_at_zero, j_explicit_small_l, j_formal, jtilde_explicit, recurrence_defect, AperyTables,
    FormalJ,
};
pub use numeric::{j_numeric_integral, j_numeric_series, SeriesEstimate};
pub use params::SpectralParams;
pub use tables::{jtilde, jtilde_cascade, jtilde_one, jtilde_two, JTable};
pub use zsums::{descent_relation_holds, zsum, Parity, YTable, ZTable};
