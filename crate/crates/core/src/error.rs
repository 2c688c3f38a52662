//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("ring mismatch between operands")]
    RingMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("not a similitude: {0}")]
    NotSimilitude(String),
    #[error("characterization failed: {0}")]
    Characterization(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
