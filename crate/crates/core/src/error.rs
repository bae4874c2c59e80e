use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("weight mismatch: expected a partition of {expected}, got one of {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("degree {degree} is outside the supported range: {reason}")]
    DegreeOutOfRange { degree: usize, reason: String },

    #[error("derived transposition count 2g + 2d - sum(l*) - 2 = {value} is negative")]
    NegativeTranspositionCount { value: i64 },

    #[error("brute-force bound exceeded: d = {degree}, k = {transpositions} (max degree {max_degree})")]
    BruteForceBound {
        degree: usize,
        transpositions: usize,
        max_degree: usize,
    },

    #[error("cache I/O failure at {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cache file {path} is malformed: {reason}")]
    CacheFormat { path: PathBuf, reason: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
