//! Numeric side of the toolkit: q-series on the upper half plane,
//! transformation laws and period polynomials, Barnes double Bernoulli
//! polynomials, Gauss hypergeometric values, and torus averages.

pub mod barnes;
pub mod error;
pub mod evaluate;
pub mod hypergeom;
pub mod mahler;
pub mod report;
pub mod transform;
pub mod uhp;

pub use barnes::barnes_b;
pub use error::AnalyticError;
pub use evaluate::{default_target, eval_adaptive, eval_series, lambert_dg, Numeric, SeriesValue};
pub use hypergeom::{f21, f21_real, ve, ve0_check, vodd_spot_check};
pub use mahler::{mahler_reference, mahler_u, ve_integral, ve_integral_check, IntegralCheck, MahlerFamily, McConfig, McEstimate};
pub use report::CheckReport;
pub use transform::{
    default_period_points, dg_transform_check, g1_period_check, period_poly, r1s_closed_form, ramanujan_check,
    PeriodPolynomial, RamanujanResidual, TransformResidual,
};
pub use uhp::UhpPoint;
