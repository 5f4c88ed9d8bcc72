use std::process::ExitCode;

use clap::Parser;
use ncho_cli::commands::{run, Cli};
use ncho_cli::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Io(_) | CliError::Json(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
