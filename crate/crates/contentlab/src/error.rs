//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus: n must be at least 1")]
    InvalidModulus,

    #[error("{what} would have {requested} elements, exceeding the cap of {cap}")]
    SizeCap {
        what: &'static str,
        requested: u128,
        cap: usize,
    },

    #[error("ideal lattice exceeds the cap of {cap} ideals")]
    IdealCap { cap: usize },

    #[error("domain mismatch: {0}")]
    DomainMismatch(&'static str),

    #[error("invalid multiplicative set: {0} is not a prime ideal")]
    InvalidMultSet(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("truncation depth {0} is degenerate: x^3 vanishes below depth 4")]
    DegenerateDepth(usize),

    #[error("Dedekind-Mertens search undecided for {pairs} pair(s) at n_max = {n_max}")]
    DmUndecided { pairs: u64, n_max: u32 },

    #[error("parse error at position {pos}: expected {expected}, found {found}")]
    Parse {
        pos: usize,
        expected: String,
        found: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
