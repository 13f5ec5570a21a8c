use thiserror::Error;

/// Failures raised by the spectral, wavefunction and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the region where the quantity is real or defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// The radial tail cannot bind (attractive coupling required).
    #[error("no bound states: {0}")]
    NoBoundStates(String),
    /// A special-case formula was called with a reduced parameter that is not zero.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Mismatched inputs, e.g. a spectrum computed for another potential.
    #[error("contract error: {0}")]
    Contract(String),
    /// The finite-difference box holds fewer bound levels than requested.
    #[error("state not captured; enlarge grid: {0}")]
    StateNotCaptured(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
