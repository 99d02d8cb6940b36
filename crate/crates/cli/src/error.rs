use std::fmt;

use burch_core::Error;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precondition(String),
    Consistency(String),
    Corpus(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Corpus(_) => 1,
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Consistency(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
            CliError::Consistency(m) => write!(f, "internal consistency failure: {m}"),
            CliError::Corpus(m) => write!(f, "corpus failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidModulus(_)
            | Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::InvalidRing(_)
            | Error::ContextMismatch
            | Error::DimensionMismatch(_)
            | Error::ConstantTerm(_)
            | Error::ZeroIdeal => CliError::Input(msg),
            Error::NotMPrimary
            | Error::NotHomogeneous(_)
            | Error::RedundantGenerator { .. }
            | Error::NotRegular { .. }
            | Error::Precondition(_)
            | Error::BoundTooLarge { .. } => CliError::Precondition(msg),
            Error::Inconsistency(_) => CliError::Consistency(msg),
        }
    }
}
