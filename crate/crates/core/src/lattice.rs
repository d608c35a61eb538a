//! Maze representation on a 2D rectangular lattice.
//!
//! A maze is stored as two boolean planes of shape `rows × cols`: `down[i][j]`
//! says whether cell `(i, j)` connects to `(i + 1, j)`, and `right[i][j]` says
//! whether it connects to `(i, j + 1)`. Every edge is stored exactly once. The
//! last row of `down` and the last column of `right` would describe periodic
//! wrap-around edges; they are always false.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub row: usize,
    pub col: usize,
}

impl Coord {
    pub const fn new(row: usize, col: usize) -> Self {
        Coord { row, col }
    }

    pub fn manhattan(self, other: Coord) -> usize {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col)
    }

    pub fn is_adjacent(self, other: Coord) -> bool {
        self.manhattan(other) == 1
    }
}

impl From<(usize, usize)> for Coord {
    fn from((row, col): (usize, usize)) -> Self {
        Coord { row, col }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
}

impl GridShape {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid(format!("grid dimensions must be at least 1, got {rows}x{cols}")));
        }
        Ok(GridShape { rows, cols })
    }

    pub fn square(n: usize) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn n_cells(&self) -> usize {
        self.rows * self.cols
    }

    /// Number of edges of the full (non-periodic) lattice.
    pub fn possible_connections(&self) -> usize {
        self.rows * (self.cols - 1) + (self.rows - 1) * self.cols
    }

    pub fn contains(&self, c: Coord) -> bool {
        c.row < self.rows && c.col < self.cols
    }

    pub fn check(&self, c: Coord) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::invalid(format!("coordinate {c} out of bounds for {}x{} grid", self.rows, self.cols)))
        }
    }

    #[inline]
    pub(crate) fn index(&self, c: Coord) -> usize {
        c.row * self.cols + c.col
    }

    #[inline]
    pub(crate) fn coord(&self, idx: usize) -> Coord {
        Coord::new(idx / self.cols, idx % self.cols)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.n_cells()).map(|i| self.coord(i))
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// The two connection planes. See the module docs for the layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionList {
    shape: GridShape,
    down: Vec<bool>,
    right: Vec<bool>,
}

impl ConnectionList {
    pub fn new(shape: GridShape) -> Self {
        let n = shape.n_cells();
        ConnectionList { shape, down: vec![false; n], right: vec![false; n] }
    }

    /// Builds a connection list from row-major planes, rejecting periodic bits.
    pub fn from_planes(shape: GridShape, down: Vec<bool>, right: Vec<bool>) -> Result<Self> {
        let n = shape.n_cells();
        if down.len() != n || right.len() != n {
            return Err(Error::invalid(format!(
                "connection planes must hold {n} entries each, got {} and {}",
                down.len(),
                right.len()
            )));
        }
        let list = ConnectionList { shape, down, right };
        if let Some((plane, c)) = list.periodic_violation() {
            return Err(Error::invalid(format!("periodic connection set in {plane} plane at {c}")));
        }
        Ok(list)
    }

    fn periodic_violation(&self) -> Option<(&'static str, Coord)> {
        let GridShape { rows, cols } = self.shape;
        (0..cols)
            .map(|j| Coord::new(rows - 1, j))
            .find(|&c| self.down[self.shape.index(c)])
            .map(|c| ("down", c))
            .or_else(|| {
                (0..rows)
                    .map(|i| Coord::new(i, cols - 1))
                    .find(|&c| self.right[self.shape.index(c)])
                    .map(|c| ("right", c))
            })
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn down_plane(&self) -> &[bool] {
        &self.down
    }

    pub fn right_plane(&self) -> &[bool] {
        &self.right
    }

    #[inline]
    pub fn down(&self, c: Coord) -> bool {
        self.down[self.shape.index(c)]
    }

    #[inline]
    pub fn right(&self, c: Coord) -> bool {
        self.right[self.shape.index(c)]
    }

    /// Sets the edge between two lattice-adjacent cells.
    pub fn set(&mut self, a: Coord, b: Coord, value: bool) -> Result<()> {
        self.shape.check(a)?;
        self.shape.check(b)?;
        if !a.is_adjacent(b) {
            return Err(Error::invalid(format!("{a} and {b} are not lattice-adjacent")));
        }
        self.set_unchecked(a, b, value);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, a: Coord, b: Coord, value: bool) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let idx = self.shape.index(lo);
        if hi.row == lo.row + 1 {
            self.down[idx] = value;
        } else {
            self.right[idx] = value;
        }
    }

    #[inline]
    pub(crate) fn get_unchecked(&self, a: Coord, b: Coord) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi.row == lo.row + 1 && hi.col == lo.col {
            self.down[self.shape.index(lo)]
        } else if hi.row == lo.row && hi.col == lo.col + 1 {
            self.right[self.shape.index(lo)]
        } else {
            false
        }
    }

    pub fn edge_count(&self) -> usize {
        self.down.iter().chain(&self.right).filter(|&&b| b).count()
    }

    /// Enabled edges as `(lower, higher)` coordinate pairs, row-major, down before right.
    pub fn edges(&self) -> Vec<(Coord, Coord)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for c in self.shape.cells() {
            if self.down(c) {
                out.push((c, Coord::new(c.row + 1, c.col)));
            }
            if self.right(c) {
                out.push((c, Coord::new(c.row, c.col + 1)));
            }
        }
        out
    }

    /// Bitwise OR with another list of the same shape.
    pub fn union(&self, other: &ConnectionList) -> Result<ConnectionList> {
        if self.shape != other.shape {
            return Err(Error::invalid(format!("cannot combine {} and {} connection lists", self.shape, other.shape)));
        }
        let or = |a: &[bool], b: &[bool]| a.iter().zip(b).map(|(x, y)| *x || *y).collect();
        Ok(ConnectionList {
            shape: self.shape,
            down: or(&self.down, &other.down),
            right: or(&self.right, &other.right),
        })
    }
}

/// Provenance attached to generated mazes. Not part of maze identity.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationMeta {
    pub algorithm: String,
    pub params: BTreeMap<String, Value>,
    /// Per-maze seed, when generated as part of a dataset.
    pub seed: Option<u64>,
    /// Retry sub-stream the maze came from (0 unless earlier draws were unsolvable).
    pub attempt: u64,
}

/// An unsolved maze. Equality and hashing ignore [`GenerationMeta`].
#[derive(Debug, Clone)]
pub struct LatticeMaze {
    connections: ConnectionList,
    meta: Option<GenerationMeta>,
}

impl PartialEq for LatticeMaze {
    fn eq(&self, other: &Self) -> bool {
        self.connections == other.connections
    }
}

impl Eq for LatticeMaze {}

impl std::hash::Hash for LatticeMaze {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.connections.hash(state)
    }
}

impl LatticeMaze {
    pub fn new(connections: ConnectionList) -> Self {
        LatticeMaze { connections, meta: None }
    }

    /// A maze with no connections.
    pub fn new_empty(rows: usize, cols: usize) -> Result<Self> {
        Ok(Self::new(ConnectionList::new(GridShape::new(rows, cols)?)))
    }

    pub fn with_meta(mut self, meta: GenerationMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    pub fn meta(&self) -> Option<&GenerationMeta> {
        self.meta.as_ref()
    }

    pub fn connections(&self) -> &ConnectionList {
        &self.connections
    }

    pub fn shape(&self) -> GridShape {
        self.connections.shape
    }

    pub fn has_connection(&self, a: Coord, b: Coord) -> Result<bool> {
        self.shape().check(a)?;
        self.shape().check(b)?;
        Ok(self.connections.get_unchecked(a, b))
    }

    /// Connected neighbours in the fixed order down, right, up, left.
    pub fn neighbors(&self, c: Coord) -> Result<Vec<Coord>> {
        self.shape().check(c)?;
        Ok(self.open_neighbors(c).collect())
    }

    #[inline]
    pub(crate) fn open_neighbors(&self, c: Coord) -> impl Iterator<Item = Coord> + '_ {
        let shape = self.shape();
        let conn = &self.connections;
        let down = (c.row + 1 < shape.rows && conn.down(c)).then(|| Coord::new(c.row + 1, c.col));
        let right = (c.col + 1 < shape.cols && conn.right(c)).then(|| Coord::new(c.row, c.col + 1));
        let up = (c.row > 0 && conn.down(Coord::new(c.row - 1, c.col))).then(|| Coord::new(c.row - 1, c.col));
        let left = (c.col > 0 && conn.right(Coord::new(c.row, c.col - 1))).then(|| Coord::new(c.row, c.col - 1));
        [down, right, up, left].into_iter().flatten()
    }

    pub fn degree(&self, c: Coord) -> usize {
        self.open_neighbors(c).count()
    }

    /// Cells reachable from `start`, including `start`, sorted row-major.
    pub fn connected_component(&self, start: Coord) -> Result<Vec<Coord>> {
        self.shape().check(start)?;
        let shape = self.shape();
        let mut seen = vec![false; shape.n_cells()];
        let mut out = self.flood(start, &mut seen);
        out.sort_unstable();
        Ok(out)
    }

    fn flood(&self, start: Coord, seen: &mut [bool]) -> Vec<Coord> {
        let shape = self.shape();
        let mut out = vec![start];
        seen[shape.index(start)] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in self.open_neighbors(c) {
                let idx = shape.index(n);
                if !seen[idx] {
                    seen[idx] = true;
                    out.push(n);
                    queue.push_back(n);
                }
            }
        }
        out
    }

    /// Partition of all cells into components, each sorted row-major, listed in
    /// order of their smallest member.
    pub fn components(&self) -> Vec<Vec<Coord>> {
        let shape = self.shape();
        let mut seen = vec![false; shape.n_cells()];
        let mut out = Vec::new();
        for idx in 0..shape.n_cells() {
            if !seen[idx] {
                let mut comp = self.flood(shape.coord(idx), &mut seen);
                comp.sort_unstable();
                out.push(comp);
            }
        }
        out
    }

    /// The component with the most cells; ties go to the one whose smallest
    /// member is lexicographically first. Sorted row-major.
    pub fn largest_component(&self) -> Vec<Coord> {
        let mut best: Vec<Coord> = Vec::new();
        for comp in self.components() {
            if comp.len() > best.len() {
                best = comp;
            }
        }
        best
    }

    /// True when the enabled edges form a forest (no cycles).
    pub fn is_acyclic(&self) -> bool {
        let comps = self.components();
        let edges = self.connections.edge_count();
        edges + comps.len() == self.shape().n_cells()
    }

    /// Connected, acyclic and touching every cell.
    pub fn is_spanning_tree(&self) -> bool {
        let n = self.shape().n_cells();
        self.connections.edge_count() == n - 1 && self.components().len() == 1
    }
}

/// A maze with two distinct endpoints and a simple connected path between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolvedMaze {
    maze: LatticeMaze,
    origin: Coord,
    target: Coord,
    solution: Vec<Coord>,
}

impl SolvedMaze {
    /// Validates and assembles a solved maze.
    pub fn new(maze: LatticeMaze, solution: Vec<Coord>) -> Result<Self> {
        let shape = maze.shape();
        let (Some(&origin), Some(&target)) = (solution.first(), solution.last()) else {
            return Err(Error::invalid("solution is empty"));
        };
        if origin == target {
            return Err(Error::invalid(format!("origin and target coincide at {origin}")));
        }
        let mut seen = vec![false; shape.n_cells()];
        for &c in &solution {
            shape.check(c)?;
            let idx = shape.index(c);
            if seen[idx] {
                return Err(Error::invalid(format!("solution revisits {c}")));
            }
            seen[idx] = true;
        }
        for w in solution.windows(2) {
            if !maze.connections.get_unchecked(w[0], w[1]) {
                return Err(Error::invalid(format!("solution steps from {} to {} without a connection", w[0], w[1])));
            }
        }
        Ok(SolvedMaze { maze, origin, target, solution })
    }

    /// Solves `maze` between the given endpoints with [`crate::solve::solve_shortest_path`].
    pub fn solve(maze: LatticeMaze, origin: Coord, target: Coord) -> Result<Self> {
        let path = crate::solve::solve_shortest_path(&maze, origin, target)?;
        Self::new(maze, path)
    }

    pub fn maze(&self) -> &LatticeMaze {
        &self.maze
    }

    pub fn shape(&self) -> GridShape {
        self.maze.shape()
    }

    pub fn connections(&self) -> &ConnectionList {
        self.maze.connections()
    }

    pub fn origin(&self) -> Coord {
        self.origin
    }

    pub fn target(&self) -> Coord {
        self.target
    }

    pub fn solution(&self) -> &[Coord] {
        &self.solution
    }

    /// Number of edges in the solution.
    pub fn path_length(&self) -> usize {
        self.solution.len() - 1
    }
}
