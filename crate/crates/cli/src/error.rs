use thiserror::Error;

use aqlam::Error as EngineError;

/// A failed query, split by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: exit status 1.
    #[error("{0}")]
    Validation(String),
    /// The engine could not finish: exit status 2.
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_status(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Computation(_) => 2,
        }
    }

    pub fn class(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Computation(_) => "computation",
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        let msg = e.to_string();
        match e {
            EngineError::InvalidCartanType(_)
            | EngineError::DimensionMismatch { .. }
            | EngineError::LetterOutOfRange { .. }
            | EngineError::NotDominant(..)
            | EngineError::NotIntegral(..)
            | EngineError::NotACharacter { .. }
            | EngineError::InvalidSubgroup(..)
            | EngineError::NotClassS(_)
            | EngineError::InvalidDiscriminant(_)
            | EngineError::MalformedModule(_)
            | EngineError::MalformedAlgebra(_)
            | EngineError::InvalidDescriptor(_) => CliError::Validation(msg),
            _ => CliError::Computation(msg),
        }
    }
}
