use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two operands live in incompatible rings (e.g. SymPoly with different symbol sets).
    #[error("incompatible operands: {0}")]
    Incompatible(String),

    /// A requested precision is too large, or two precisions disagreed.
    #[error("precision failure: {0}")]
    Precision(String),

    /// An identity that must hold exactly did not.
    #[error("identity violated: {0}")]
    Identity(String),

    /// An iterative method failed to converge.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
