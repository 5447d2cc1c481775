mod args;
mod commands;
mod specs;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};

/// Anything that ends a command early. The variant picks the exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 on --help
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cayley(a) => commands::cayley(&a),
        Command::Check(a) => commands::check(&a),
        Command::Orbit(a) => commands::orbit(&a),
        Command::Screw(a) => commands::screw(&a),
        Command::Top(a) => commands::top(&a),
        Command::Diff(a) => commands::diff(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pga: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
