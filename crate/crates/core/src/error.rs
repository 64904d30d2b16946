use std::fmt;

use thiserror::Error;

use crate::lattice::{Family, Params};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a letter sequence is not a Dyck word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordViolation {
    Empty,
    OddLength,
    InvalidLetter(char),
    /// The prefix ending here has more `r` than `u`.
    PrefixDeficit,
    /// Type A words need equally many `u` and `r`.
    UnequalCounts {
        ups: usize,
        rights: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for WordViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordViolation::Empty => write!(f, "word is empty"),
            WordViolation::OddLength => write!(f, "word has odd length"),
            WordViolation::InvalidLetter(c) => write!(f, "letter {c:?} is not 'u' or 'r'"),
            WordViolation::PrefixDeficit => write!(f, "prefix contains more r than u"),
            WordViolation::UnequalCounts { ups, rights } => {
                write!(f, "type A word has {ups} u and {rights} r")
            }
            WordViolation::LengthMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
        }
    }
}

/// Which constraint on a height sequence failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeightViolation {
    Empty,
    ZeroSemilength,
    WrongLength {
        expected: usize,
        found: usize,
    },
    /// Type B sequences have at most n entries.
    TooLong {
        max: usize,
        found: usize,
    },
    Decreasing,
    /// `h_i < i`: the path dips below the diagonal.
    BelowDiagonal,
    AboveBound {
        bound: usize,
    },
    /// Last entry of a type A path must equal n.
    LastNotN {
        n: usize,
    },
    /// Last entry of a type B path must be `2n-k` or `2n-k+1`.
    BadFinalHeight {
        low: usize,
        high: usize,
    },
}

impl fmt::Display for HeightViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightViolation::Empty => write!(f, "sequence is empty"),
            HeightViolation::ZeroSemilength => write!(f, "semilength must be positive"),
            HeightViolation::WrongLength { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            HeightViolation::TooLong { max, found } => {
                write!(f, "at most {max} entries allowed, found {found}")
            }
            HeightViolation::Decreasing => write!(f, "sequence must be weakly increasing"),
            HeightViolation::BelowDiagonal => write!(f, "entry h_i is smaller than i"),
            HeightViolation::AboveBound { bound } => write!(f, "entry exceeds {bound}"),
            HeightViolation::LastNotN { n } => write!(f, "last entry must equal {n}"),
            HeightViolation::BadFinalHeight { low, high } => {
                write!(f, "last entry must be {low} or {high}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `position` is 1-based; for length-level violations it is the word length.
    #[error("invalid Dyck word at position {position}: {violation}")]
    InvalidWord { position: usize, violation: WordViolation },

    /// `index` is the 1-based index of the first offending entry.
    #[error("invalid height sequence at index {index}: {violation}")]
    InvalidHeights { index: usize, violation: HeightViolation },

    #[error("parameter mismatch: {left} vs {right}")]
    ParamMismatch { left: Params, right: Params },

    #[error("expected a {expected} path, got {found}")]
    FamilyMismatch { expected: Family, found: Family },

    #[error("path {0} is not centrally symmetric")]
    NotCentrallySymmetric(String),

    #[error("path {0} is not join-irreducible")]
    NotJoinIrreducible(String),

    #[error("pair ({0},{1}) is not an element of the triangle poset")]
    NotInPoset(usize, usize),

    #[error("not an order ideal: contains ({0},{1}) but not ({2},{3})")]
    NotAnIdeal(usize, usize, usize, usize),

    #[error("{params} exceeds the enumeration guard ({limit})")]
    GuardExceeded { params: Params, limit: String },

    #[error("path {0} is not an element of the enumerated lattice")]
    NotInLattice(String),

    #[error("relative pseudocomplement does not exist: {0}")]
    NoResidual(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn word(position: usize, violation: WordViolation) -> Self {
        Error::InvalidWord { position, violation }
    }

    pub(crate) fn heights(index: usize, violation: HeightViolation) -> Self {
        Error::InvalidHeights { index, violation }
    }
}
