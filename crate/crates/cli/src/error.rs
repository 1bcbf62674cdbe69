use thiserror::Error;

use crate::dsl::Pos;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{pos}: {message}")]
    Parse { pos: Pos, message: String },

    #[error("{pos}: undeclared {what} `{name}`")]
    Undeclared { what: &'static str, name: String, pos: Pos },

    #[error("{pos}: {message}")]
    Semantic { pos: Pos, message: String },

    #[error("{0}")]
    Eval(String),

    #[error("{0}")]
    Core(#[from] liftcheck_core::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn semantic(pos: Pos, message: impl Into<String>) -> CliError {
        CliError::Semantic { pos, message: message.into() }
    }

    /// Process exit status: 3 for a violated internal invariant, 2 for
    /// anything the input is responsible for.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(liftcheck_core::Error::Invariant(_)) => 3,
            _ => 2,
        }
    }
}
