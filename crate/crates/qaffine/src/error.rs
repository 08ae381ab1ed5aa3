//! Crate-level error type for fallible constructors and the CLI runner.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: char, rank: usize },

    #[error("node {0} has no content")]
    NoContent(String),

    #[error("lattice point is not in the expected lattice: {0}")]
    LatticeMembership(String),

    #[error("sign exponent {0} is not an integer on a reachable state")]
    NonIntegerSign(String),

    #[error("mode-{k} oscillator Gram matrix is singular")]
    SingularGram { k: i64 },

    #[error("no admissible node for the weight pair")]
    NotAdmissible,

    #[error("ambiguous admissible node: {0}")]
    AmbiguousAdmissible(String),

    #[error("leading coefficient of the designated component vanishes")]
    ZeroLeadingTerm,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
