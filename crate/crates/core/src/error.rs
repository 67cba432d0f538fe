use thiserror::Error;

/// Error type shared by every module in this crate.
///
/// The variants are coarse on purpose: callers mostly care about
/// distinguishing "the input was malformed" from "the request is sound but
/// exceeds a documented size cap" from "the answer depends on a Brauer-class
/// verdict this crate cannot settle".
#[derive(Debug, Error)]
pub enum Error {
    /// A group table, homomorphism, or extension failed a structural check.
    #[error("group construction: {0}")]
    Group(String),

    /// A table failed the 2-cocycle identity or normalization.
    #[error("invalid cocycle: {0}")]
    Cocycle(String),

    /// The request is well-formed but exceeds a documented size cap.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    /// Input text (twist spec, group expression, field name) failed to parse.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The computation would need a case this crate deliberately refuses to
    /// guess at (for example an inexact radical test over an exotic field).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A comparison could not be settled because some symbol algebra came
    /// back `Unknown`; the payload names the offending comparison.
    #[error("undecided Brauer verdict: {0}")]
    UnknownBlocked(String),

    /// Catch-all for invalid arguments (bad primes, out-of-range indices).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::CapExceeded(_) => 3,
            Error::UnknownBlocked(_) => 4,
            _ => 1,
        }
    }
}
