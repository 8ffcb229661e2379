//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by parsing, preconditions and resource budgets.
#[derive(Debug, Error)]
pub enum Error {
    /// A word or transition refers to a symbol outside the alphabet.
    #[error("unknown symbol `{symbol}`")]
    UnknownSymbol { symbol: String },

    /// Two objects that must share an alphabet do not.
    #[error("alphabet mismatch: expected [{expected}], got [{got}]")]
    AlphabetMismatch { expected: String, got: String },

    /// A structural precondition of an operation is violated.
    #[error("{0}")]
    Precondition(String),

    /// An input combination the procedures refuse to answer on.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Text-format parse error with source location.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// The meta-automaton exploration exceeded its vertex budget.
    #[error("vertex budget exhausted ({budget} vertices)")]
    VertexBudget { budget: usize },

    /// Underlying I/O failure.
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VertexBudget { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
