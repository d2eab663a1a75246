use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::parse::ParseError;

/// One failed parameter check, located by a path into the expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("validation failed: {}", join_violations(.0))]
    Validation(Vec<Violation>),

    #[error("graph would have {estimated} vertices, over the cap of {cap}")]
    ResourceLimit { estimated: BigUint, cap: usize },

    /// A closed form produced a non-integral or negative intermediate. Every
    /// formula here is integral, so this always points at a transcription bug.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn single_violation(path: &str, message: impl Into<String>) -> Self {
        Error::Validation(vec![Violation {
            path: path.to_string(),
            message: message.into(),
        }])
    }
}
