use thiserror::Error;

/// Everything that can go wrong while building root data or computing with characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {label}{rank}: {reason}")]
    InvalidType { label: String, rank: usize, reason: String },

    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("character is not Weyl-invariant: {0}")]
    NotWeylInvariant(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("type {label}{rank} has {positive_roots} positive roots (limit {limit}); pass --force to run anyway")]
    FeasibilityGate {
        label: String,
        rank: usize,
        positive_roots: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
