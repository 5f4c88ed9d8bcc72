//! Exact truncated q-expansions with exponents on a grid `1/N`, over
//! rationals or formal constants, and the modular identities built on them.

pub mod eisen;
pub mod error;
pub mod forms;
pub mod identities;
pub mod ring;
pub mod series;

pub use eisen::{dg, dg11, g1_phi_difference, hecke, hecke_full, phi1, FormalSeries};
pub use error::QSeriesError;
pub use forms::{
    big_e, big_g, eisenstein, eta, eta_quotient, fquartic, fquartic_dual_check, g1_closed_form,
    g1_integration_check, sigma_div, theta, tmod, tmod_dual_check, wtilde2, wtilde2_dual_check, Theta,
};
pub use identities::{
    cprime, cprime_check, theta_hypergeom_check, verify_w2, verify_w4, verify_w6, wtilde, CheckOutcome,
};
pub use ring::Coefficient;
pub use series::{QSeries, RatSeries};
