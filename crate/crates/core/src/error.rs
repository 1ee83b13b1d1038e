use thiserror::Error;

/// Errors raised by the tangle calculus, the diagram oracle and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid fraction {num}/{den}")]
    InvalidFraction { num: i64, den: i64 },
    #[error("expression is not a rational tangle: {0}")]
    NotRational(String),
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown knot name {0:?}")]
    UnknownName(String),
}

impl TangleError {
    pub fn precondition(msg: impl Into<String>) -> Self {
        TangleError::Precondition(msg.into())
    }

    /// Short machine-readable reason code.
    pub fn reason(&self) -> &'static str {
        match self {
            TangleError::Syntax { .. } => "syntax",
            TangleError::InvalidFraction { .. } => "invalid-fraction",
            TangleError::NotRational(_) => "not-rational",
            TangleError::CapExceeded { .. } => "cap-exceeded",
            TangleError::Precondition(_) => "precondition",
            TangleError::Unsupported(_) => "unsupported",
            TangleError::UnknownName(_) => "unknown-name",
        }
    }
}

pub type Result<T> = std::result::Result<T, TangleError>;
