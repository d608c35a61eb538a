//! Shared `(2·rows+1) × (2·cols+1)` geometry behind the ASCII and pixel formats.
//!
//! Cell `(i, j)` sits at `(2i+1, 2j+1)`. Odd/even positions between two cells
//! are open iff the cells are connected. Even/even junctions and the border are
//! always wall. Solution cells and the gaps between consecutive solution cells
//! are marked as path, with the first and last cell marked origin and target.

use crate::error::{ParseError, Position};
use crate::lattice::{ConnectionList, Coord, GridShape, LatticeMaze, SolvedMaze};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    Wall,
    Open,
    Origin,
    Target,
    Path,
}

pub(crate) type MarkGrid = Vec<Vec<Mark>>;

fn gap_between(a: Coord, b: Coord) -> (usize, usize) {
    (a.row + b.row + 1, a.col + b.col + 1)
}

/// Walls and corridors only.
pub(crate) fn render_maze(maze: &LatticeMaze) -> MarkGrid {
    let shape = maze.shape();
    let conn = maze.connections();
    let mut grid = vec![vec![Mark::Wall; 2 * shape.cols + 1]; 2 * shape.rows + 1];
    for c in shape.cells() {
        grid[2 * c.row + 1][2 * c.col + 1] = Mark::Open;
        if conn.down(c) {
            grid[2 * c.row + 2][2 * c.col + 1] = Mark::Open;
        }
        if conn.right(c) {
            grid[2 * c.row + 1][2 * c.col + 2] = Mark::Open;
        }
    }
    grid
}

pub(crate) fn mark_path(grid: &mut MarkGrid, solution: &[Coord]) {
    for &c in solution {
        grid[2 * c.row + 1][2 * c.col + 1] = Mark::Path;
    }
    for w in solution.windows(2) {
        let (r, c) = gap_between(w[0], w[1]);
        grid[r][c] = Mark::Path;
    }
}

pub(crate) fn mark_endpoints(grid: &mut MarkGrid, origin: Coord, target: Coord) {
    grid[2 * origin.row + 1][2 * origin.col + 1] = Mark::Origin;
    grid[2 * target.row + 1][2 * target.col + 1] = Mark::Target;
}

pub(crate) fn render_solved(sm: &SolvedMaze) -> MarkGrid {
    let mut grid = render_maze(sm.maze());
    mark_path(&mut grid, sm.solution());
    mark_endpoints(&mut grid, sm.origin(), sm.target());
    grid
}

fn err(row: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::at(Position::Grid { row, col }, msg)
}

/// Rebuilds a solved maze from a mark grid, checking every geometric rule.
pub(crate) fn parse_marks(grid: &[Vec<Mark>]) -> Result<SolvedMaze, ParseError> {
    let height = grid.len();
    let width = grid.first().map_or(0, Vec::len);
    if height < 3 || width < 3 || height.is_multiple_of(2) || width.is_multiple_of(2) {
        return Err(ParseError::at(
            Position::Whole,
            format!("grid must be (2r+1)x(2c+1) with r,c >= 1, got {height}x{width}"),
        ));
    }
    if let Some(r) = grid.iter().position(|row| row.len() != width) {
        return Err(err(r, grid[r].len(), format!("row has length {}, expected {width}", grid[r].len())));
    }
    let shape = GridShape { rows: height / 2, cols: width / 2 };

    let mut conn = ConnectionList::new(shape);
    let mut origin = None;
    let mut target = None;
    let mut path_cells = 0usize;
    let mut path_gaps = 0usize;
    for (r, row) in grid.iter().enumerate() {
        for (c, &m) in row.iter().enumerate() {
            let border = r == 0 || c == 0 || r == height - 1 || c == width - 1;
            match (r % 2, c % 2) {
                (1, 1) => {
                    let cell = Coord::new(r / 2, c / 2);
                    match m {
                        Mark::Wall => return Err(err(r, c, "cell position holds a wall")),
                        Mark::Origin if origin.replace(cell).is_some() => {
                            return Err(err(r, c, "more than one origin"))
                        }
                        Mark::Target if target.replace(cell).is_some() => {
                            return Err(err(r, c, "more than one target"))
                        }
                        Mark::Path => path_cells += 1,
                        _ => {}
                    }
                }
                (0, 0) => {
                    if m != Mark::Wall {
                        return Err(err(r, c, "junction position must be a wall"));
                    }
                }
                _ if border => {
                    if m != Mark::Wall {
                        return Err(err(r, c, "border must be a wall"));
                    }
                }
                (rr, _) => match m {
                    Mark::Wall => {}
                    Mark::Open | Mark::Path => {
                        if m == Mark::Path {
                            path_gaps += 1;
                        }
                        let (a, b) = if rr == 0 {
                            (Coord::new(r / 2 - 1, c / 2), Coord::new(r / 2, c / 2))
                        } else {
                            (Coord::new(r / 2, c / 2 - 1), Coord::new(r / 2, c / 2))
                        };
                        conn.set_unchecked(a, b, true);
                    }
                    Mark::Origin | Mark::Target => return Err(err(r, c, "endpoint marker between cells")),
                },
            }
        }
    }
    let origin = origin.ok_or_else(|| ParseError::at(Position::Whole, "no origin marker"))?;
    let target = target.ok_or_else(|| ParseError::at(Position::Whole, "no target marker"))?;
    let maze = LatticeMaze::new(conn);

    // follow path-marked gaps from the origin to the target
    let mut solution = vec![origin];
    let mut prev: Option<Coord> = None;
    let mut cur = origin;
    while cur != target {
        let mut next = None;
        for nb in maze.open_neighbors(cur) {
            if Some(nb) == prev {
                continue;
            }
            let (gr, gc) = gap_between(cur, nb);
            if grid[gr][gc] != Mark::Path {
                continue;
            }
            let cell_mark = grid[2 * nb.row + 1][2 * nb.col + 1];
            if !matches!(cell_mark, Mark::Path | Mark::Target) {
                return Err(err(gr, gc, "path gap leads to an unmarked cell"));
            }
            if next.replace(nb).is_some() {
                return Err(err(2 * cur.row + 1, 2 * cur.col + 1, "path branches"));
            }
        }
        let Some(nb) = next else {
            return Err(err(2 * cur.row + 1, 2 * cur.col + 1, "path is not contiguous"));
        };
        if solution.len() > shape.n_cells() {
            return Err(err(2 * nb.row + 1, 2 * nb.col + 1, "path loops"));
        }
        solution.push(nb);
        prev = Some(cur);
        cur = nb;
    }
    if path_gaps != solution.len() - 1 {
        return Err(ParseError::at(Position::Whole, "path-marked gaps outside the origin-target path"));
    }
    if solution.len() != path_cells + 2 {
        return Err(ParseError::at(
            Position::Whole,
            format!("{} path cells are not on the origin-target path", (path_cells + 2).saturating_sub(solution.len())),
        ));
    }
    SolvedMaze::new(maze, solution).map_err(|e| ParseError::at(Position::Whole, e.to_string()))
}
