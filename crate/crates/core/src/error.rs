use alloc::string::String;
use num_bigint::BigUint;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Text does not follow the grammar.
    Malformed(&'static str),
    /// A symbol appears twice.
    Repeated(u64),
    /// A symbol is zero or exceeds the degree.
    OutOfRange(u64),
}

impl core::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseErrorKind::Malformed(what) => write!(f, "{what}"),
            ParseErrorKind::Repeated(s) => write!(f, "symbol {s} appears more than once"),
            ParseErrorKind::OutOfRange(s) => write!(f, "symbol {s} is out of range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {position}: {kind}")]
    Parse {
        position: usize,
        kind: ParseErrorKind,
    },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("letter {letter} is out of range for degree {degree}")]
    LetterOutOfRange { letter: u64, degree: usize },

    #[error("{count} reduced words exceed the ceiling of {ceiling}")]
    CeilingExceeded { count: BigUint, ceiling: u64 },

    #[error("rank {n} exceeds the configured maximum {max}")]
    BudgetExceeded { n: usize, max: usize },

    #[error("word is not formed by consecutive integers")]
    NotConsecutive,

    #[error("empty input")]
    EmptyInput,

    #[error("word {word} is not a one-element commutation class of {permutation}")]
    NotAnAtom { word: String, permutation: String },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
