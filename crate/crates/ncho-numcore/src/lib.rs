//! Numeric core: exact rationals, the formal ring spanned by powers of `pi^2`
//! and odd zeta values, Bernoulli numbers, and arbitrary-precision complex
//! floats used for numeric verification.

pub mod bigcomplex;
pub mod constants;
pub mod error;
pub mod formal;
pub mod quadrature;
pub mod rational;

pub use bigcomplex::{BigComplex, Precision, DEFAULT_PRECISION};
pub use constants::{eval_formal, riemann_zeta_numeric};
pub use error::NumError;
pub use formal::{formal_arith, zeta_half, ConstMonomial, FormalNumber, FormalOp};
pub use rational::{bernoulli_number, binom_neg_half, binomial, parse_rat, rat, rat_int, rat_to_f64, rat_to_string, Rat};
