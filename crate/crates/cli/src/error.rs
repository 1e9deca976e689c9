use std::fmt;
use std::io;

use quadrangle::Error;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or values.
    Usage(String),
    /// A solver or iteration ran out of budget.
    NotConverged(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::NotConverged(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::NotConverged(m) => write!(f, "not converged: {m}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::MaxIterations { .. }
            | Error::StepCollapse { .. }
            | Error::SingularJacobian { .. }
            | Error::DerivativeVanishes { .. }
            | Error::NonFinite { .. } => CliError::NotConverged(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
