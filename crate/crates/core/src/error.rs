use thiserror::Error;

/// Failure modes of the construction and verification pipeline.
///
/// Everything except `NotOddPrimePower` and `GeneratorNotFound` signals an
/// internal inconsistency: the constructions are theorems, so a violation
/// means a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {q} is not an odd prime power")]
    NotOddPrimePower { q: u64 },

    #[error("no generator with index {index} in GF(q^2)")]
    GeneratorNotFound { index: usize },

    #[error("invalid field description: {0}")]
    InvalidField(String),

    #[error("Sidon set for q = {q} has {got} elements, expected {expected}")]
    SizeMismatch { q: u64, expected: u64, got: u64 },

    #[error("lemma violated: {0}")]
    LemmaViolation(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("common neighbors of a vertex with itself are undefined (v = {v})")]
    SameVertex { v: u32 },

    #[error("absolute point {vertex} has no antipodal partner")]
    PairingViolation { vertex: u32 },

    #[error("excision set would exceed its budget: need {k}, budget {budget}")]
    KTooLarge { k: u64, budget: u64 },

    #[error("representatives {i} and {j} have no common neighbor")]
    MissingCommonNeighbor { i: u32, j: u32 },

    #[error("edge accounting mismatch: direct recount {direct}, formula {formula}")]
    AccountingMismatch { direct: u64, formula: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
