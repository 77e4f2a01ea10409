//! Library half of the `pimtype` binary, so integration tests can drive the
//! commands in-process.

pub mod args;
mod commands;
mod input;

pub use args::{Cli, Command, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// Input parsed but an invariant or cross-check failed; exit code 1.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Inconsistent(_) => 1,
        }
    }
}

/// Rendered output and the exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Reality(a) => commands::reality(a, cli.format),
        Command::Classify(a) => commands::classify(a, cli.format),
        Command::Verify(a) => commands::verify(a, cli.format),
        Command::Oracle(a) => commands::oracle(a, cli.format),
    }
}
