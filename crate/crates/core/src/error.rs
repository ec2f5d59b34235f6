use thiserror::Error;

use crate::subset::Subset;

/// Largest supported ground-set size.
pub const MAX_GROUND_SET: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground-set size {m} outside the supported range {min}..={max}")]
    GroundSetSize { m: usize, min: usize, max: usize },

    #[error("element {element} is not in [{m}]")]
    ElementOutOfRange { element: usize, m: usize },

    #[error("function is not nice: f({superset}) = 1 but f({subset}) = 0")]
    NotNice { superset: Subset, subset: Subset },

    #[error("the zero function has empty support and is not a complex")]
    EmptySupport,

    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("malformed chain complex: composite of differentials {first} and {second} is nonzero")]
    MalformedComplex { first: usize, second: usize },

    #[error("generator matrix has rank {actual}, expected {claimed}")]
    RankDeficient { claimed: usize, actual: usize },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_ground_set(m: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&m) {
        Ok(())
    } else {
        Err(Error::GroundSetSize { m, min: 1, max })
    }
}
