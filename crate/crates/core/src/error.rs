//! Error type shared by all core modules.

use alloc::string::String;
use core::fmt;

/// Errors raised by the analytics operations.
///
/// Input parsing and I/O errors belong to the `cofollow` companion crate;
/// everything here is a violation of an operation contract.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An account used as a seed is not present in the graph.
    UnknownSeed(String),
    /// An account token was empty or contained whitespace.
    InvalidAccount(String),
    /// An aggregate was requested over an empty input sequence.
    EmptyInput(&'static str),
    /// AUC is undefined when one of the classes has no members.
    SingleClass { positives: usize, negatives: usize },
    /// Standard error needs at least two task results.
    NotEnoughTasks(usize),
    /// One-vs-rest ranking needs at least two seeds.
    SingleSeed,
    /// Requested embedding dimension must stay below the point count.
    DimensionTooLarge { dim: usize, points: usize },
    /// Distance matrix was not symmetric with a zero diagonal.
    InvalidDistanceMatrix(String),
    /// The eigensolver failed to converge.
    NoConvergence { sweeps: usize },
    /// A fixed-test removal emptied a test vector that the pre-filter
    /// should have excluded.
    FixedTestUnderflow(String),
    /// The synthetic-graph configuration is unusable.
    BadConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownSeed(s) => write!(f, "seed account not found in graph: {s}"),
            Error::InvalidAccount(s) => write!(f, "invalid account token: {s:?}"),
            Error::EmptyInput(what) => write!(f, "empty input: {what}"),
            Error::SingleClass { positives, negatives } => write!(
                f,
                "AUC undefined: {positives} positives, {negatives} negatives"
            ),
            Error::NotEnoughTasks(n) => {
                write!(f, "standard error needs at least 2 task results, got {n}")
            }
            Error::SingleSeed => write!(f, "one-vs-rest ranking needs at least 2 seeds"),
            Error::DimensionTooLarge { dim, points } => write!(
                f,
                "embedding dimension {dim} must be smaller than the point count {points}"
            ),
            Error::InvalidDistanceMatrix(msg) => write!(f, "invalid distance matrix: {msg}"),
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge after {sweeps} sweeps")
            }
            Error::FixedTestUnderflow(user) => write!(
                f,
                "fixed-test removal emptied the vector of test user {user}"
            ),
            Error::BadConfig(msg) => write!(f, "bad planted-graph config: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
