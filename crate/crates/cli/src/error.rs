use std::fmt;

use genstirling::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DEGENERATE: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
    pub const REGIME: i32 = 5;
    pub const NON_CONVERGENCE: i32 = 6;
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(exit::USAGE, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::DegenerateTriple => exit::DEGENERATE,
            Error::Regime(_)
            | Error::GammaPole { .. }
            | Error::Branch(_)
            | Error::ZeroFactor { .. } => exit::REGIME,
            Error::NonConvergence { .. } => exit::NON_CONVERGENCE,
            _ => exit::USAGE,
        };
        CliError::new(code, err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::new(exit::USAGE, format!("i/o error: {err}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::new(exit::USAGE, format!("i/o error: {err}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
