//! Token sequences for autoregressive models.
//!
//! ```text
//! seq  := ADJ ORI TGT PATH
//! ADJ  := "<ADJLIST_START>" (coord "<-->" coord ";")* "<ADJLIST_END>"
//! ORI  := "<ORIGIN_START>" coord "<ORIGIN_END>"
//! TGT  := "<TARGET_START>" coord "<TARGET_END>"
//! PATH := "<PATH_START>" coord+ "<PATH_END>"
//! ```
//!
//! A coord is `(i,j)` in the single scheme or `(i,` `,j)` in the pair scheme.
//! Trailing `<PADDING>` tokens are ignored when parsing.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::vocab::{
    classify, col_token, coord_token, row_token, CoordScheme, TokenKind, ADJACENCY_ENDLINE, ADJLIST_END, ADJLIST_START,
    CONNECTOR, ORIGIN_END, ORIGIN_START, PADDING, PATH_END, PATH_START, TARGET_END, TARGET_START,
};
use crate::error::{Error, ParseError, Position, Result};
use crate::lattice::{ConnectionList, Coord, GridShape, LatticeMaze, SolvedMaze};

/// Tokens plus the grid shape they describe. The shape is not encoded in the
/// tokens; when absent it is inferred as the bounding box of all coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
    pub shape: Option<GridShape>,
}

impl TokenSequence {
    /// Tokens joined with single spaces.
    pub fn to_text(&self) -> String {
        self.tokens.join(" ")
    }

    pub fn from_text(text: &str, shape: Option<GridShape>) -> Self {
        TokenSequence { tokens: text.split_whitespace().map(str::to_string).collect(), shape }
    }

    /// Everything up to and including `<PATH_START>`: what a model is prompted with.
    pub fn prompt(&self) -> &[String] {
        match self.tokens.iter().position(|t| t == PATH_START) {
            Some(i) => &self.tokens[..=i],
            None => &self.tokens,
        }
    }
}

fn push_coord(out: &mut Vec<String>, c: Coord, scheme: CoordScheme) {
    match scheme {
        CoordScheme::Single => out.push(coord_token(c)),
        CoordScheme::Pair => {
            out.push(row_token(c.row));
            out.push(col_token(c.col));
        }
    }
}

/// Encodes with the adjacency list in the order given. `adjlist` must list
/// every edge of the maze exactly once, each as an adjacent pair in either order.
pub fn encode_with_adjlist(sm: &SolvedMaze, scheme: CoordScheme, adjlist: &[(Coord, Coord)]) -> Result<TokenSequence> {
    let conn = sm.connections();
    if adjlist.len() != conn.edge_count() {
        return Err(Error::invalid(format!(
            "adjacency list has {} entries, maze has {} connections",
            adjlist.len(),
            conn.edge_count()
        )));
    }
    let mut seen = HashSet::with_capacity(adjlist.len());
    for &(a, b) in adjlist {
        let key = if a < b { (a, b) } else { (b, a) };
        if !sm.maze().has_connection(a, b)? || !seen.insert(key) {
            return Err(Error::invalid(format!("adjacency entry {a} <--> {b} is not a distinct maze connection")));
        }
    }

    let mut out = Vec::with_capacity(4 * adjlist.len() + 2 * sm.solution().len() + 12);
    out.push(ADJLIST_START.to_string());
    for &(a, b) in adjlist {
        push_coord(&mut out, a, scheme);
        out.push(CONNECTOR.to_string());
        push_coord(&mut out, b, scheme);
        out.push(ADJACENCY_ENDLINE.to_string());
    }
    out.push(ADJLIST_END.to_string());
    out.push(ORIGIN_START.to_string());
    push_coord(&mut out, sm.origin(), scheme);
    out.push(ORIGIN_END.to_string());
    out.push(TARGET_START.to_string());
    push_coord(&mut out, sm.target(), scheme);
    out.push(TARGET_END.to_string());
    out.push(PATH_START.to_string());
    for &c in sm.solution() {
        push_coord(&mut out, c, scheme);
    }
    out.push(PATH_END.to_string());
    Ok(TokenSequence { tokens: out, shape: Some(sm.shape()) })
}

/// Encodes with the edge order and each edge's endpoint order shuffled by `rng`.
pub fn to_tokens<R: Rng + ?Sized>(sm: &SolvedMaze, scheme: CoordScheme, rng: &mut R) -> TokenSequence {
    let mut edges = sm.connections().edges();
    edges.shuffle(rng);
    for e in edges.iter_mut() {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    encode_with_adjlist(sm, scheme, &edges).expect("edges come from the maze itself")
}

struct Parser<'a> {
    tokens: &'a [String],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, at: usize, msg: impl Into<String>) -> ParseError {
        let tok = self.tokens.get(at).map_or("<end of input>", String::as_str);
        ParseError::at(Position::Token(at), format!("{} (token {tok:?})", msg.into()))
    }

    fn peek(&self) -> Option<&'a str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn expect(&mut self, want: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(self.pos, format!("expected {want}")))
        }
    }

    fn at_coord(&self) -> bool {
        matches!(self.peek().and_then(classify), Some(TokenKind::Coord(_) | TokenKind::Row(_)))
    }

    /// Returns the coordinate and the index of its first token.
    fn coord(&mut self) -> Result<(Coord, usize), ParseError> {
        let at = self.pos;
        match self.peek().and_then(classify) {
            Some(TokenKind::Coord(c)) => {
                self.pos += 1;
                Ok((c, at))
            }
            Some(TokenKind::Row(r)) => match self.tokens.get(at + 1).and_then(|t| classify(t)) {
                Some(TokenKind::Col(c)) => {
                    self.pos += 2;
                    Ok((Coord::new(r, c), at))
                }
                _ => Err(self.err(at + 1, "expected a column token after a row token")),
            },
            None if self.peek().is_some() => Err(self.err(at, "unknown token")),
            _ => Err(self.err(at, "expected a coordinate")),
        }
    }
}

pub fn from_tokens(seq: &TokenSequence) -> Result<SolvedMaze, ParseError> {
    let mut p = Parser { tokens: &seq.tokens, pos: 0 };
    let mut coords_at: Vec<(Coord, usize)> = Vec::new();

    p.expect(ADJLIST_START)?;
    let mut edges = Vec::new();
    while p.peek() != Some(ADJLIST_END) {
        let a = p.coord()?;
        p.expect(CONNECTOR)?;
        let b = p.coord()?;
        p.expect(ADJACENCY_ENDLINE)?;
        if !a.0.is_adjacent(b.0) {
            return Err(p.err(a.1, format!("{} and {} are not lattice-adjacent", a.0, b.0)));
        }
        edges.push((a, b));
        coords_at.extend([a, b]);
    }
    p.expect(ADJLIST_END)?;
    p.expect(ORIGIN_START)?;
    let origin = p.coord()?;
    p.expect(ORIGIN_END)?;
    p.expect(TARGET_START)?;
    let target = p.coord()?;
    p.expect(TARGET_END)?;
    p.expect(PATH_START)?;
    let mut path = vec![p.coord()?];
    while p.at_coord() {
        path.push(p.coord()?);
    }
    p.expect(PATH_END)?;
    while p.peek() == Some(PADDING) {
        p.pos += 1;
    }
    if p.pos != seq.tokens.len() {
        return Err(p.err(p.pos, "trailing tokens after <PATH_END>"));
    }
    coords_at.extend([origin, target]);
    coords_at.extend(path.iter().copied());

    let shape = match seq.shape {
        Some(s) => {
            if let Some(&(c, at)) = coords_at.iter().find(|(c, _)| !s.contains(*c)) {
                return Err(p.err(at, format!("{c} is outside the declared {s} grid")));
            }
            s
        }
        None => GridShape {
            rows: coords_at.iter().map(|(c, _)| c.row + 1).max().unwrap_or(1),
            cols: coords_at.iter().map(|(c, _)| c.col + 1).max().unwrap_or(1),
        },
    };

    let mut conn = ConnectionList::new(shape);
    for ((a, _), (b, _)) in edges {
        conn.set_unchecked(a, b, true);
    }
    let maze = LatticeMaze::new(conn);

    if path[0].0 != origin.0 {
        return Err(p.err(path[0].1, format!("path starts at {} but origin is {}", path[0].0, origin.0)));
    }
    let last = path[path.len() - 1];
    if last.0 != target.0 {
        return Err(p.err(last.1, format!("path ends at {} but target is {}", last.0, target.0)));
    }
    for w in path.windows(2) {
        if !maze.connections().get_unchecked(w[0].0, w[1].0) {
            return Err(p.err(w[1].1, format!("no connection from {} to {}", w[0].0, w[1].0)));
        }
    }
    let solution: Vec<Coord> = path.iter().map(|(c, _)| *c).collect();
    SolvedMaze::new(maze, solution).map_err(|e| ParseError::at(Position::Whole, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn one_by_two() -> SolvedMaze {
        let mut c = ConnectionList::new(GridShape::new(1, 2).unwrap());
        c.set(Coord::new(0, 0), Coord::new(0, 1), true).unwrap();
        SolvedMaze::solve(LatticeMaze::new(c), Coord::new(0, 0), Coord::new(0, 1)).unwrap()
    }

    #[test]
    fn one_by_two_sequence() {
        let sm = one_by_two();
        let seq = encode_with_adjlist(&sm, CoordScheme::Single, &[(Coord::new(0, 0), Coord::new(0, 1))]).unwrap();
        assert_eq!(
            seq.to_text(),
            "<ADJLIST_START> (0,0) <--> (0,1) ; <ADJLIST_END> <ORIGIN_START> (0,0) <ORIGIN_END> \
             <TARGET_START> (0,1) <TARGET_END> <PATH_START> (0,0) (0,1) <PATH_END>"
        );
        assert_eq!(from_tokens(&seq).unwrap(), sm);
        assert_eq!(seq.prompt().last().unwrap(), PATH_START);

        let pair = encode_with_adjlist(&sm, CoordScheme::Pair, &[(Coord::new(0, 1), Coord::new(0, 0))]).unwrap();
        assert_eq!(
            pair.to_text(),
            "<ADJLIST_START> (0, ,1) <--> (0, ,0) ; <ADJLIST_END> <ORIGIN_START> (0, ,0) <ORIGIN_END> \
             <TARGET_START> (0, ,1) <TARGET_END> <PATH_START> (0, ,0) (0, ,1) <PATH_END>"
        );
        assert_eq!(from_tokens(&pair).unwrap(), sm);
    }

    #[test]
    fn shuffles_do_not_matter() {
        let sm = crate::lattice::SolvedMaze::solve(
            crate::generators::gen_wilson(GridShape::new(4, 4).unwrap(), &mut ChaCha8Rng::seed_from_u64(3)),
            Coord::new(0, 0),
            Coord::new(3, 3),
        )
        .unwrap();
        let a = to_tokens(&sm, CoordScheme::Single, &mut ChaCha8Rng::seed_from_u64(1));
        let b = to_tokens(&sm, CoordScheme::Single, &mut ChaCha8Rng::seed_from_u64(2));
        assert_ne!(a.tokens, b.tokens);
        assert_eq!(from_tokens(&a).unwrap(), from_tokens(&b).unwrap());
        let adj_entries = a.tokens.iter().filter(|t| *t == ";").count();
        assert_eq!(adj_entries, sm.connections().edge_count());
    }

    #[test]
    fn grammar_errors() {
        let sm = one_by_two();
        let good = to_tokens(&sm, CoordScheme::Single, &mut ChaCha8Rng::seed_from_u64(0));

        let mut missing_end = good.clone();
        missing_end.tokens.pop();
        let e = from_tokens(&missing_end).unwrap_err();
        assert_eq!(e.position, Position::Token(missing_end.tokens.len()));

        let mut unknown = good.clone();
        unknown.tokens[1] = "(x,y)".into();
        assert_eq!(from_tokens(&unknown).unwrap_err().position, Position::Token(1));

        let declared = TokenSequence { shape: Some(GridShape::new(1, 1).unwrap()), ..good.clone() };
        assert!(from_tokens(&declared).is_err());

        let mut trailing = good.clone();
        trailing.tokens.push(PADDING.into());
        assert!(from_tokens(&trailing).is_ok());
        trailing.tokens.push("(0,0)".into());
        assert!(from_tokens(&trailing).is_err());

        let bad_path = TokenSequence::from_text(
            "<ADJLIST_START> <ADJLIST_END> <ORIGIN_START> (0,0) <ORIGIN_END> \
             <TARGET_START> (0,1) <TARGET_END> <PATH_START> (0,0) (0,1) <PATH_END>",
            None,
        );
        assert_eq!(from_tokens(&bad_path).unwrap_err().position, Position::Token(10));

        let not_adjacent = TokenSequence::from_text("<ADJLIST_START> (0,0) <--> (1,1) ; <ADJLIST_END>", None);
        assert_eq!(from_tokens(&not_adjacent).unwrap_err().position, Position::Token(1));
    }

    #[test]
    fn adjlist_must_match_maze() {
        let sm = one_by_two();
        assert!(encode_with_adjlist(&sm, CoordScheme::Single, &[]).is_err());
        let dup = [(Coord::new(0, 0), Coord::new(0, 1)), (Coord::new(0, 1), Coord::new(0, 0))];
        assert!(encode_with_adjlist(&sm, CoordScheme::Single, &dup).is_err());
    }
}
