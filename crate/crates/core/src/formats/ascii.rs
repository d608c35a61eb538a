use std::fmt;
use std::str::FromStr;

use super::grid::{parse_marks, render_solved, Mark};
use crate::error::{ParseError, Position};
use crate::lattice::SolvedMaze;

pub const WALL: char = '#';
pub const OPEN: char = ' ';
pub const ORIGIN: char = 'S';
pub const TARGET: char = 'E';
pub const PATH: char = 'X';

fn mark_char(m: Mark) -> char {
    match m {
        Mark::Wall => WALL,
        Mark::Open => OPEN,
        Mark::Origin => ORIGIN,
        Mark::Target => TARGET,
        Mark::Path => PATH,
    }
}

fn char_mark(c: char) -> Option<Mark> {
    Some(match c {
        WALL => Mark::Wall,
        OPEN => Mark::Open,
        ORIGIN => Mark::Origin,
        TARGET => Mark::Target,
        PATH => Mark::Path,
        _ => return None,
    })
}

/// Text rendering: `2·rows+1` lines of `2·cols+1` characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsciiMaze {
    pub lines: Vec<String>,
}

impl fmt::Display for AsciiMaze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromStr for AsciiMaze {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(AsciiMaze { lines: s.lines().map(str::to_string).collect() })
    }
}

pub fn to_ascii(sm: &SolvedMaze) -> AsciiMaze {
    let lines = render_solved(sm).into_iter().map(|row| row.into_iter().map(mark_char).collect()).collect();
    AsciiMaze { lines }
}

pub fn from_ascii(ascii: &AsciiMaze) -> Result<SolvedMaze, ParseError> {
    let mut grid = Vec::with_capacity(ascii.lines.len());
    for (r, line) in ascii.lines.iter().enumerate() {
        let row = line
            .chars()
            .enumerate()
            .map(|(c, ch)| {
                char_mark(ch).ok_or_else(|| {
                    ParseError::at(Position::Grid { row: r, col: c }, format!("unexpected character {ch:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        grid.push(row);
    }
    parse_marks(&grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ConnectionList, Coord, GridShape, LatticeMaze};

    fn one_by_two() -> SolvedMaze {
        let mut c = ConnectionList::new(GridShape::new(1, 2).unwrap());
        c.set(Coord::new(0, 0), Coord::new(0, 1), true).unwrap();
        SolvedMaze::solve(LatticeMaze::new(c), Coord::new(0, 0), Coord::new(0, 1)).unwrap()
    }

    #[test]
    fn one_by_two_rendering() {
        let a = to_ascii(&one_by_two());
        assert_eq!(a.lines, vec!["#####", "#SXE#", "#####"]);
        assert_eq!(a.to_string(), "#####\n#SXE#\n#####\n");
        assert_eq!(from_ascii(&a).unwrap(), one_by_two());
    }

    fn parse(lines: &[&str]) -> Result<SolvedMaze, ParseError> {
        from_ascii(&AsciiMaze { lines: lines.iter().map(|s| s.to_string()).collect() })
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse(&["#####", "#SXS#", "#####"]).is_err());
        assert!(parse(&["#####", "#S E#", "#####"]).is_err()); // gap not marked
        assert!(parse(&["#####", "#SXE#"]).is_err());
        assert!(parse(&["#####", "#SXE", "#####"]).is_err());
        assert!(parse(&["#####", "#SXEQ", "#####"]).is_err());
        assert!(parse(&["#####", "#S#E#", "#####"]).is_err());
        assert!(parse(&["## ##", "#SXE#", "#####"]).is_err());
        assert!(parse(&["#####", "#S  #", "#####"]).is_err());
        let e = parse(&["#######", "#SXEXX#", "#######"]).unwrap_err();
        assert_eq!(e.position, Position::Whole);
        let e = parse(&["#####", "#SXE#", "#####", "#SXE#", "#####"]).unwrap_err();
        assert!(e.message.contains("more than one"));
    }
}
