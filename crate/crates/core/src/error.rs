use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (shapes, non-finite entries, bad indices).
    #[error("invalid input: {0}")]
    Input(String),

    #[error("not a Lie algebra under the declared basis: closure residual {residual:.3e} exceeds {bound:.3e}")]
    NotClosed { residual: f64, bound: f64 },

    /// The operation's hypotheses (nilpotency, solvability) do not hold.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Rank decisions disagree with each other; usually a tolerance problem.
    #[error("numerical inconsistency in degree {degree}: {detail}")]
    Tolerance { degree: usize, detail: String },

    #[error("eigenvalue iteration did not converge for a {size}x{size} matrix")]
    NoConvergence { size: usize },

    /// A result contradicts a statement that must hold for the given input.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
