//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A weight or index argument violates a parity precondition.
    #[error("parity precondition violated: {0}")]
    Parity(String),

    /// An index argument is outside its documented domain.
    #[error("argument out of range: {0}")]
    Range(String),

    /// Matrix or vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Product of two linear forms that are both supported outside the
    /// constant generator. Such products never occur in any identity in
    /// scope, so hitting this indicates an assembly bug in the caller.
    #[error("product of two non-constant L-value generators")]
    GeneratorProduct,

    /// Arithmetic on two truncated series of different lengths.
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    /// Constant terms that cannot be combined (opaque constants).
    #[error("incompatible constant terms: {0}")]
    IncompatibleConstants(String),

    /// A series with an opaque constant term was used where an exact
    /// constant is required.
    #[error("opaque constant term in series operation: {0}")]
    OpaqueConstant(String),

    /// Two numeric evaluation strategies failed to agree, or a residual
    /// exceeded the requested tolerance.
    #[error("tolerance failure: |{value:e}| exceeds {tol:e}")]
    Tolerance { value: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
