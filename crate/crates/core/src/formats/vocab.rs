//! Token vocabulary with shell-ordered coordinates.
//!
//! Special tokens take the first indices. Coordinates follow in shell order:
//! shell `k` holds every cell with `max(row, col) == k`, so the top-left `m × m`
//! block of any grid uses exactly the first `m²` coordinate indices and a model
//! trained on size `n` sees a smaller maze through the same token ids.

use std::collections::HashMap;

use crate::lattice::Coord;

pub const ADJLIST_START: &str = "<ADJLIST_START>";
pub const ADJLIST_END: &str = "<ADJLIST_END>";
pub const ORIGIN_START: &str = "<ORIGIN_START>";
pub const ORIGIN_END: &str = "<ORIGIN_END>";
pub const TARGET_START: &str = "<TARGET_START>";
pub const TARGET_END: &str = "<TARGET_END>";
pub const PATH_START: &str = "<PATH_START>";
pub const PATH_END: &str = "<PATH_END>";
pub const CONNECTOR: &str = "<-->";
pub const ADJACENCY_ENDLINE: &str = ";";
pub const PADDING: &str = "<PADDING>";

pub const SPECIAL_TOKENS: [&str; 11] = [
    ADJLIST_START,
    ADJLIST_END,
    ORIGIN_START,
    ORIGIN_END,
    TARGET_START,
    TARGET_END,
    PATH_START,
    PATH_END,
    CONNECTOR,
    ADJACENCY_ENDLINE,
    PADDING,
];

/// How coordinates become tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoordScheme {
    /// One token per coordinate: `(i,j)`.
    #[default]
    Single,
    /// Two tokens per coordinate: a row token `(i,` and a column token `,j)`.
    Pair,
}

impl CoordScheme {
    pub fn name(self) -> &'static str {
        match self {
            CoordScheme::Single => "coord-single",
            CoordScheme::Pair => "coord-pair",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "coord-single" => Some(CoordScheme::Single),
            "coord-pair" => Some(CoordScheme::Pair),
            _ => None,
        }
    }
}

/// Position of `c` in shell order.
///
/// Within shell `k = max(row, col)` the column edge comes first, top to bottom,
/// then the row edge from right to left.
pub fn shell_rank(c: Coord) -> usize {
    let k = c.row.max(c.col);
    k * k + if c.row < k { c.row } else { k + (k - c.col) }
}

/// Inverse of [`shell_rank`].
pub fn shell_coord(rank: usize) -> Coord {
    let k = rank.isqrt();
    let offset = rank - k * k;
    if offset < k {
        Coord::new(offset, k)
    } else {
        Coord::new(k, 2 * k - offset)
    }
}

pub fn coord_token(c: Coord) -> String {
    format!("({},{})", c.row, c.col)
}

pub fn row_token(row: usize) -> String {
    format!("({row},")
}

pub fn col_token(col: usize) -> String {
    format!(",{col})")
}

/// Parsed meaning of a single token string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Special(&'static str),
    Coord(Coord),
    Row(usize),
    Col(usize),
}

pub(crate) fn classify(tok: &str) -> Option<TokenKind> {
    if let Some(s) = SPECIAL_TOKENS.iter().find(|s| **s == tok) {
        return Some(TokenKind::Special(s));
    }
    let num = |s: &str| -> Option<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
            return None;
        }
        s.parse().ok()
    };
    if let Some(inner) = tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let (r, c) = inner.split_once(',')?;
        return Some(TokenKind::Coord(Coord::new(num(r)?, num(c)?)));
    }
    if let Some(r) = tok.strip_prefix('(').and_then(|t| t.strip_suffix(',')) {
        return Some(TokenKind::Row(num(r)?));
    }
    if let Some(c) = tok.strip_prefix(',').and_then(|t| t.strip_suffix(')')) {
        return Some(TokenKind::Col(num(c)?));
    }
    None
}

/// Maps token strings to indices for grids up to `max_grid × max_grid`.
///
/// Single scheme: `(i,j)` sits at `|special| + shell_rank(i,j)`.
/// Pair scheme: row token `i` at `|special| + 2i`, column token `j` at
/// `|special| + 2j + 1`; interleaving keeps the prefix property.
#[derive(Debug, Clone)]
pub struct TokenVocab {
    max_grid: usize,
    scheme: CoordScheme,
    tokens: Vec<String>,
    index: HashMap<String, usize>,
}

impl TokenVocab {
    pub fn new(max_grid: usize, scheme: CoordScheme) -> Self {
        let mut tokens: Vec<String> = SPECIAL_TOKENS.iter().map(|s| s.to_string()).collect();
        match scheme {
            CoordScheme::Single => {
                tokens.extend((0..max_grid * max_grid).map(|r| coord_token(shell_coord(r))));
            }
            CoordScheme::Pair => {
                for i in 0..max_grid {
                    tokens.push(row_token(i));
                    tokens.push(col_token(i));
                }
            }
        }
        let index = tokens.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TokenVocab { max_grid, scheme, tokens, index }
    }

    pub fn max_grid(&self) -> usize {
        self.max_grid
    }

    pub fn scheme(&self) -> CoordScheme {
        self.scheme
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn n_special(&self) -> usize {
        SPECIAL_TOKENS.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    pub fn token(&self, index: usize) -> Option<&str> {
        self.tokens.get(index).map(String::as_str)
    }

    /// Token ids for a sequence; `None` if any token is outside the vocabulary.
    pub fn encode<S: AsRef<str>>(&self, tokens: &[S]) -> Option<Vec<usize>> {
        tokens.iter().map(|t| self.index_of(t.as_ref())).collect()
    }

    pub fn decode(&self, ids: &[usize]) -> Option<Vec<String>> {
        ids.iter().map(|&i| self.token(i).map(str::to_string)).collect()
    }

    /// Compact 16-bit ids; `None` if a token is unknown or the vocabulary
    /// outgrows `u16`.
    pub fn encode_u16<S: AsRef<str>>(&self, tokens: &[S]) -> Option<Vec<u16>> {
        self.encode(tokens)?.into_iter().map(|i| u16::try_from(i).ok()).collect()
    }
}
