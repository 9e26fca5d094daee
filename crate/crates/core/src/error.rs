use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A hypothesis of the closed-form answers that the input fails.
///
/// The oracles never answer outside their hypotheses; they return one of
/// these instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScopeError {
    /// Some consecutive difference of the weight is at least `p`.
    NotPRestricted,
    /// `psi > p` for a weight, or `chi > p` for a partition.
    NotCompletelySplittable,
    /// `lambda < mu` (weights) or `lambda` strictly dominates `mu` (partitions).
    OrderHypothesisFails,
    /// Some nonzero part repeats `p` or more times.
    NotPRegular,
    /// The symmetric-group statement requires `p > 2`.
    CharTwo,
    /// Entries are not weakly decreasing.
    NonDominant,
    /// `hat`/`tilde` were asked for on an input that is not big.
    NotBig,
}

impl ScopeError {
    pub fn as_str(self) -> &'static str {
        match self {
            ScopeError::NotPRestricted => "NotPRestricted",
            ScopeError::NotCompletelySplittable => "NotCompletelySplittable",
            ScopeError::OrderHypothesisFails => "OrderHypothesisFails",
            ScopeError::NotPRegular => "NotPRegular",
            ScopeError::CharTwo => "CharTwo",
            ScopeError::NonDominant => "NonDominant",
            ScopeError::NotBig => "NotBig",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ScopeError::NotPRestricted => "weight is not p-restricted",
            ScopeError::NotCompletelySplittable => "not completely splittable",
            ScopeError::OrderHypothesisFails => "order hypothesis between lambda and mu fails",
            ScopeError::NotPRegular => "partition is not p-regular",
            ScopeError::CharTwo => "characteristic 2 is excluded",
            ScopeError::NonDominant => "weight is not dominant",
            ScopeError::NotBig => "input is not big",
        }
    }
}

impl fmt::Display for ScopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.as_str(), self.describe())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("out of scope: {0}")]
    OutOfScope(ScopeError),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit byte-sized residues (need p < 256)")]
    ModulusTooLarge(u32),
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("padding to length {len} would drop nonzero entry at position {position}")]
    PadTruncation { len: usize, position: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("generator index {index} out of range for degree {degree}")]
    GeneratorIndex { index: usize, degree: usize },
    #[error("columns are linearly dependent")]
    DependentColumns,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("representations have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("corrupt cache entry {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<ScopeError> for Error {
    fn from(e: ScopeError) -> Self {
        Error::OutOfScope(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
