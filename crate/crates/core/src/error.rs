use thiserror::Error;

/// Errors raised by the enumeration library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chords ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    CrossingChords {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("a triangulated {n}-gon needs {expected} chords, found {found}")]
    WrongChordCount {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("chord ({0}, {1}) appears more than once")]
    DuplicateChord(usize, usize),
    #[error("({0}, {1}) is not a chord of a {2}-gon")]
    InvalidChord(usize, usize, usize),
    #[error("{what} = {value} exceeds the desk-scale limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("pattern is not outerplanar: {0}")]
    NotOuterplanar(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
