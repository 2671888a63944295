use thiserror::Error;

/// Errors produced by checked operations across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violates a documented precondition (shape mismatch, index out
    /// of range, vector outside a required span, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Completing the operation would exceed a configured resource limit,
    /// such as the cap on the number of basis subsets.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The input carries no usable information (for example, every spanning
    /// vector is numerically zero).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
