use thiserror::Error;

/// Every failure the library can report.
///
/// Input and dimension problems are the caller's fault; the remaining
/// variants mean an internal consistency check tripped and should be
/// treated as bugs or as a request that exceeded the configured precision.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("truncation shortfall: need the lambda^{needed} coefficient but the series is only known through lambda^{achieved}")]
    TruncationShortfall { needed: i64, achieved: i64 },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("imaginary residue: {0}")]
    ImaginaryResidue(String),

    #[error("interpolation inconsistent: {0}")]
    Interpolation(String),

    #[error("identity mismatch: {0}")]
    Mismatch(String),
}

impl HodgeError {
    /// True for errors caused by bad arguments rather than failed internal checks.
    pub fn is_user_error(&self) -> bool {
        matches!(self, HodgeError::InvalidInput(_) | HodgeError::Dimension(_))
    }
}

pub type Result<T> = std::result::Result<T, HodgeError>;
