use thiserror::Error;

use crate::family::FamilyId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("defining characteristic: r = {r} divides q = {q}")]
    DefiningCharacteristic { q: u64, r: u64 },

    #[error("q = {q} is not valid for {family}: {reason}")]
    InvalidQ {
        family: FamilyId,
        q: u64,
        reason: &'static str,
    },

    #[error("catalog unavailable for {0}")]
    CatalogUnavailable(FamilyId),

    #[error("twisted factor {kind} cannot be evaluated at q = {q}")]
    IncompatibleTwistedFactor { kind: &'static str, q: u64 },

    #[error("inexact division while evaluating Phi_{index}({q})")]
    InexactDivision { index: u32, q: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid catalog: {}", .0.join("; "))]
    InvalidCatalog(Vec<String>),

    #[error("interpolation system is singular (repeated phi = {0})")]
    SingularSystem(String),

    #[error("need {needed} samples for interpolation, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("sample search for {row} exhausted: needed {needed}, found {found:?}")]
    SampleSearchExhausted {
        row: String,
        needed: usize,
        found: Vec<(u64, u64)>,
    },
}
