//! Prime-power congruences for normalized Apéry-like numbers.
//!
//! Large indices `m p^n` are handled p-adically: the explicit Z-sum formula
//! is evaluated with truncated p-adic arithmetic instead of exact rationals,
//! whose sizes grow linearly with the index.

pub mod conjecture;
pub mod error;
pub mod lemmas;
pub mod lifts;
pub mod padic;
pub mod theorem;

pub use conjecture::{conjecture_report, ConjectureReport, ConjectureRow};
pub use error::CongruenceError;
pub use lemmas::{binom_lemma_check, central_binom_experiment, ordp_bound_check, CentralBinomReport, CentralBinomRow};
pub use lifts::jtilde_padic;
pub use padic::{is_odd_prime, max_precision, ordp, residue, PAdic};
pub use theorem::{
    congruence_sweep, odd_congruence, weak_congruence, weak_congruence_capped, CongruenceCheck, SweepReport,
    DEFAULT_SIZE_CAP,
};
