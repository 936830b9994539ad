use std::fmt;

use crate::partitions::Partition;

/// Errors from series evaluation and closed-form oracles.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A partition has more nonzero parts than the argument vector has
    /// coordinates. The evaluator refuses such inputs instead of picking a
    /// vanishing convention.
    PartitionTooLong { length: usize, n_vars: usize },
    /// Argument vectors of different dimension where equal dimension is required.
    DimensionMismatch { x: usize, y: usize },
    /// A generalized Pochhammer factor vanished; the series coefficient is
    /// undefined at this index.
    VanishingPochhammer { mu: f64, lambda: Partition },
    /// Alternating-sum denominator is singular: two squared coordinates
    /// coincide within tolerance.
    SingularAlternatingSum { which: &'static str, value: f64 },
    /// Parameter outside the operation's domain.
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PartitionTooLong { length, n_vars } => write!(
                f,
                "partition has {} nonzero parts but the vector has only {} coordinates",
                length, n_vars
            ),
            Error::DimensionMismatch { x, y } => {
                write!(f, "dimension mismatch: x has {} coordinates, y has {}", x, y)
            }
            Error::VanishingPochhammer { mu, lambda } => write!(
                f,
                "generalized Pochhammer symbol ({})_{} vanishes",
                mu, lambda
            ),
            Error::SingularAlternatingSum { which, value } => write!(
                f,
                "alternating sum is singular: squared coordinates of {} coincide near {}",
                which, value
            ),
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}
