//! Error taxonomy shared by every module.
//!
//! Three buckets, chosen so a frontend can map them onto distinct exit codes:
//! domain errors (bad input or precondition violation), resource errors
//! (an enumeration bound or budget was exceeded), and internal errors
//! (a checked invariant broke, which is always a bug).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain or a violated precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A desk-scale enumeration bound or search budget was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// A checked internal invariant failed; indicates a bug, never bad input.
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
