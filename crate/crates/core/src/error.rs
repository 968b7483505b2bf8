use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("resource limit exceeded: {what} is {actual}, limit is {limit}")]
    Resource {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Position is 1-based in the generator order.
    #[error("not linear quotients at position {position}: colon ideal has generator {generator}")]
    NotLinearQuotients { position: usize, generator: Monomial },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
