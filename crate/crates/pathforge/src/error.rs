use thiserror::Error;

/// Errors produced by parsing, construction and enumeration.
///
/// All positions and labels reported here are 1-based, matching the
/// convention used throughout the documentation and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input word has no steps; paths of length zero are rejected everywhere.
    #[error("empty word: a path needs at least one up-step and one down-step")]
    EmptyWord,

    /// A word must contain an even number of steps to return to the axis.
    #[error("odd length {len}: a path has an even number of steps")]
    OddLength { len: usize },

    /// Up-steps and down-steps must balance for the path to end on the axis.
    #[error("unbalanced word: {ups} up-steps vs {downs} down-steps")]
    UnbalancedWord { ups: usize, downs: usize },

    /// A character outside the step alphabet was found while parsing.
    #[error("illegal character {found:?} at position {position}: expected 'U', 'D', '1' or '0'")]
    IllegalCharacter { position: usize, found: char },

    /// The two mark sequences do not form a valid checkmark pair.
    #[error("malformed checkmark pair: {reason}")]
    MalformedPair { reason: String },

    /// Operations on paths require a positive half-length n.
    #[error("n must be at least 1, got {n}")]
    InvalidN { n: usize },

    /// Guard against runaway exhaustive enumeration.
    #[error("n = {n} exceeds the enumeration limit {max_n}")]
    LimitExceeded { n: usize, max_n: usize },

    /// Exact integer arithmetic would wrap; the result is not representable.
    #[error("arithmetic overflow computing {what}")]
    Overflow { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
