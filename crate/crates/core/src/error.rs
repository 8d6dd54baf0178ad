use thiserror::Error;

/// Errors raised by library operations.
///
/// `Domain` covers violated preconditions (ranges, coprimality, critical levels),
/// `Parse` covers malformed textual input such as labels or rationals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("incompatible exponent lattices: {0}")]
    Lattice(String),
    #[error("insufficient truncation: {0}")]
    Truncation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
