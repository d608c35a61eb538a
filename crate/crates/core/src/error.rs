use std::fmt;

use crate::lattice::Coord;

/// Errors raised anywhere in the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no path from {origin} to {target}")]
    NoPath { origin: Coord, target: Coord },

    #[error("unsolvable maze: largest connected component has {size} cell(s), need at least {required}")]
    Unsolvable { size: usize, required: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("generation exhausted for maze index {index} after {attempts} attempts (config {config})")]
    GenerationExhausted { index: usize, attempts: usize, config: String },

    #[error("unsupported format_version {found:?} (expected {expected:?})")]
    Version { found: String, expected: String },

    #[error("load error in field `{field}`: {message}")]
    Load { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn load(field: impl Into<String>, message: impl fmt::Display) -> Self {
        Error::Load { field: field.into(), message: message.to_string() }
    }
}

/// Where in the input a parse failure happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// Line and column (both zero based) of an ASCII or pixel grid.
    Grid { row: usize, col: usize },
    /// Index into a token sequence.
    Token(usize),
    /// The input as a whole (dimensions, missing markers).
    Whole,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Grid { row, col } => write!(f, "line {row}, column {col}"),
            Position::Token(i) => write!(f, "token {i}"),
            Position::Whole => write!(f, "input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(position: Position, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}
