use thiserror::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a computed identity does not hold.
pub const EXIT_VERIFICATION: i32 = 1;
/// Exit status for unusable input or arguments.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{field}: {message}")]
    Invalid { field: String, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] liespectra::Error),
}

impl CliError {
    pub fn invalid(field: &str, message: impl Into<String>) -> Self {
        CliError::Invalid { field: field.to_string(), message: message.into() }
    }

    /// Verification failures and numerical breakdowns exit with 1; anything
    /// wrong with the input or the request exits with 2.
    pub fn exit_code(&self) -> i32 {
        use liespectra::Error as E;
        match self {
            CliError::Core(E::Verification(_) | E::Tolerance { .. } | E::NoConvergence { .. }) => EXIT_VERIFICATION,
            _ => EXIT_INPUT,
        }
    }
}
