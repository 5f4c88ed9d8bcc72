//! Library side of the `ncho` command-line tool: argument model, output
//! formatting and the acceptance suite.

pub mod commands;
pub mod error;
pub mod output;
pub mod suite;

pub use error::CliError;
