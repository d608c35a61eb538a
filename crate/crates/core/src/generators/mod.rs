//! Maze generation algorithms. Every generator writes the same
//! [`LatticeMaze`] representation and draws all randomness from the stream it
//! is handed, so equal streams give bit-identical mazes.

mod params;

use rand::Rng;

pub use params::{
    parse_kv, Budget, DfsParams, GeneratorSpec, ParamMap, PercolationParams, ALGORITHMS, DEFAULT_PERCOLATION_P,
    GEN_DFS, GEN_DFS_PERCOLATION, GEN_PERCOLATION, GEN_WILSON,
};

use crate::error::Result;
use crate::lattice::{ConnectionList, Coord, GenerationMeta, GridShape, LatticeMaze};

impl GeneratorSpec {
    /// Runs the algorithm and tags the result with its name and parameters.
    pub fn generate<R: Rng + ?Sized>(&self, shape: GridShape, rng: &mut R) -> Result<LatticeMaze> {
        let maze = match self {
            GeneratorSpec::Dfs(d) => gen_dfs(shape, d, rng)?,
            GeneratorSpec::Wilson => gen_wilson(shape, rng),
            GeneratorSpec::Percolation(p) => gen_percolation(shape, *p, rng),
            GeneratorSpec::DfsPercolation(d, p) => gen_dfs_percolation(shape, d, *p, rng)?,
        };
        Ok(maze.with_meta(GenerationMeta {
            algorithm: self.name().to_string(),
            params: self.params(),
            seed: None,
            attempt: 0,
        }))
    }
}

/// In-bounds lattice neighbours, down/right/up/left, regardless of connections.
#[inline]
fn lattice_neighbors(shape: GridShape, c: Coord, out: &mut Vec<Coord>) {
    out.clear();
    if c.row + 1 < shape.rows {
        out.push(Coord::new(c.row + 1, c.col));
    }
    if c.col + 1 < shape.cols {
        out.push(Coord::new(c.row, c.col + 1));
    }
    if c.row > 0 {
        out.push(Coord::new(c.row - 1, c.col));
    }
    if c.col > 0 {
        out.push(Coord::new(c.row, c.col - 1));
    }
}

fn random_cell<R: Rng + ?Sized>(shape: GridShape, rng: &mut R) -> Coord {
    shape.coord(rng.gen_range(0..shape.n_cells()))
}

/// Randomized depth-first search with an explicit stack.
///
/// Unconstrained, this yields a spanning tree. `accessible_cells` caps the number
/// of visited cells, `max_tree_depth` caps the tree distance of any visited cell
/// from the start, and `do_forks = false` stops at the first dead end, leaving a
/// single corridor.
pub fn gen_dfs<R: Rng + ?Sized>(shape: GridShape, params: &DfsParams, rng: &mut R) -> Result<LatticeMaze> {
    let n = shape.n_cells();
    let budget = match params.accessible_cells {
        Some(b) => b.resolve(n)?.min(n),
        None => n,
    };
    let max_depth = match params.max_tree_depth {
        Some(b) => b.resolve(n)?,
        None => usize::MAX,
    };
    let start = match params.start_coord {
        Some(c) => {
            shape.check(c)?;
            c
        }
        None => random_cell(shape, rng),
    };

    let mut conn = ConnectionList::new(shape);
    let mut visited = vec![false; n];
    visited[shape.index(start)] = true;
    let mut n_visited = 1;
    // the stack always holds the tree path from `start` to its top
    let mut stack = vec![start];
    let mut candidates = Vec::with_capacity(4);

    while let Some(&current) = stack.last() {
        if n_visited >= budget {
            break;
        }
        let depth = stack.len() - 1;
        lattice_neighbors(shape, current, &mut candidates);
        candidates.retain(|c| !visited[shape.index(*c)]);
        if !candidates.is_empty() && depth < max_depth {
            let next = candidates[rng.gen_range(0..candidates.len())];
            conn.set_unchecked(current, next, true);
            visited[shape.index(next)] = true;
            n_visited += 1;
            stack.push(next);
        } else if params.do_forks {
            stack.pop();
        } else {
            break;
        }
    }
    Ok(LatticeMaze::new(conn))
}

/// Uniform spanning tree by Wilson's algorithm: loop-erased random walks from
/// each cell not yet in the tree, taken in row-major order, each grafted on
/// once it hits the tree.
pub fn gen_wilson<R: Rng + ?Sized>(shape: GridShape, rng: &mut R) -> LatticeMaze {
    let n = shape.n_cells();
    let mut conn = ConnectionList::new(shape);
    let mut in_tree = vec![false; n];
    // successor of each cell on the current walk; later visits overwrite
    // earlier ones, which erases loops implicitly
    let mut next = vec![usize::MAX; n];
    let mut nbrs = Vec::with_capacity(4);

    let root = rng.gen_range(0..n);
    in_tree[root] = true;

    for start in 0..n {
        let mut u = start;
        while !in_tree[u] {
            lattice_neighbors(shape, shape.coord(u), &mut nbrs);
            let step = nbrs[rng.gen_range(0..nbrs.len())];
            next[u] = shape.index(step);
            u = next[u];
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            conn.set_unchecked(shape.coord(u), shape.coord(next[u]), true);
            u = next[u];
        }
    }
    LatticeMaze::new(conn)
}

/// Each lattice edge is enabled independently with probability `p`. Edges are
/// drawn in row-major cell order, down before right.
pub fn gen_percolation<R: Rng + ?Sized>(shape: GridShape, params: PercolationParams, rng: &mut R) -> LatticeMaze {
    LatticeMaze::new(percolate(shape, params.p, rng))
}

fn percolate<R: Rng + ?Sized>(shape: GridShape, p: f64, rng: &mut R) -> ConnectionList {
    let mut conn = ConnectionList::new(shape);
    for c in shape.cells() {
        if c.row + 1 < shape.rows && rng.gen_bool(p) {
            conn.set_unchecked(c, Coord::new(c.row + 1, c.col), true);
        }
        if c.col + 1 < shape.cols && rng.gen_bool(p) {
            conn.set_unchecked(c, Coord::new(c.row, c.col + 1), true);
        }
    }
    conn
}

/// Union of a [`gen_dfs`] maze and a percolation layer, both drawn from `rng`
/// in that order.
pub fn gen_dfs_percolation<R: Rng + ?Sized>(
    shape: GridShape,
    dfs: &DfsParams,
    perc: PercolationParams,
    rng: &mut R,
) -> Result<LatticeMaze> {
    let tree = gen_dfs(shape, dfs, rng)?;
    let layer = percolate(shape, perc.p, rng);
    Ok(LatticeMaze::new(tree.connections().union(&layer)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shape(r: usize, c: usize) -> GridShape {
        GridShape::new(r, c).unwrap()
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn dfs_default_is_spanning_tree() {
        for seed in 0..50 {
            let m = gen_dfs(shape(4, 4), &DfsParams::default(), &mut rng(seed)).unwrap();
            assert!(m.is_spanning_tree());
            assert_eq!(m.connections().edge_count(), 15);
        }
        let m = gen_dfs(shape(1, 1), &DfsParams::default(), &mut rng(0)).unwrap();
        assert_eq!(m.connections().edge_count(), 0);
    }

    #[test]
    fn dfs_without_forks_is_a_corridor() {
        let params = DfsParams { do_forks: false, ..Default::default() };
        for seed in 0..100 {
            let m = gen_dfs(shape(6, 6), &params, &mut rng(seed)).unwrap();
            let comp = m.largest_component();
            let degrees: Vec<usize> = comp.iter().map(|&c| m.degree(c)).collect();
            assert!(degrees.iter().all(|&d| d <= 2));
            assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
            assert!(m.is_acyclic());
        }
    }

    #[test]
    fn dfs_accessible_cells_budget() {
        let start = Coord::new(2, 3);
        let params =
            DfsParams { accessible_cells: Some(Budget::Absolute(20)), start_coord: Some(start), ..Default::default() };
        for seed in 0..100 {
            let m = gen_dfs(shape(6, 6), &params, &mut rng(seed)).unwrap();
            let comp = m.connected_component(start).unwrap();
            assert_eq!(comp.len(), 20);
            assert_eq!(m.connections().edge_count(), 19);
        }
        // larger than the grid clamps to a full spanning tree
        let params = DfsParams { accessible_cells: Some(Budget::Absolute(20)), ..Default::default() };
        assert!(gen_dfs(shape(3, 3), &params, &mut rng(1)).unwrap().is_spanning_tree());
        let params = DfsParams { accessible_cells: Some(Budget::Fraction(0.5)), ..Default::default() };
        let m = gen_dfs(shape(6, 6), &params, &mut rng(1)).unwrap();
        assert_eq!(m.connections().edge_count(), 17);
    }

    #[test]
    fn dfs_depth_limit() {
        let start = Coord::new(0, 0);
        let params =
            DfsParams { max_tree_depth: Some(Budget::Absolute(4)), start_coord: Some(start), ..Default::default() };
        for seed in 0..50 {
            let m = gen_dfs(shape(6, 6), &params, &mut rng(seed)).unwrap();
            for c in m.connected_component(start).unwrap() {
                let path = crate::solve::solve_shortest_path(&m, start, c).unwrap();
                assert!(path.len() - 1 <= 4);
            }
        }
        let bad = DfsParams { max_tree_depth: Some(Budget::Fraction(0.01)), ..Default::default() };
        assert!(gen_dfs(shape(3, 3), &bad, &mut rng(0)).is_err());
        let off_grid = DfsParams { start_coord: Some(Coord::new(9, 9)), ..Default::default() };
        assert!(gen_dfs(shape(3, 3), &off_grid, &mut rng(0)).is_err());
    }

    #[test]
    fn wilson_spanning() {
        assert_eq!(gen_wilson(shape(1, 1), &mut rng(0)).connections().edge_count(), 0);
        for seed in 0..50 {
            assert!(gen_wilson(shape(5, 7), &mut rng(seed)).is_spanning_tree());
        }
    }

    #[test]
    fn percolation_extremes() {
        let s = shape(5, 4);
        assert_eq!(gen_percolation(s, PercolationParams::new(0.0).unwrap(), &mut rng(3)).connections().edge_count(), 0);
        assert_eq!(
            gen_percolation(s, PercolationParams::new(1.0).unwrap(), &mut rng(3)).connections().edge_count(),
            s.possible_connections()
        );
    }

    #[test]
    fn dfs_percolation_relations() {
        let s = shape(5, 5);
        let dfs = DfsParams::default();
        for seed in 0..30 {
            let zero = gen_dfs_percolation(s, &dfs, PercolationParams::new(0.0).unwrap(), &mut rng(seed)).unwrap();
            let plain = gen_dfs(s, &dfs, &mut rng(seed)).unwrap();
            assert_eq!(zero, plain);
            let mixed = gen_dfs_percolation(s, &dfs, PercolationParams::new(0.4).unwrap(), &mut rng(seed)).unwrap();
            assert!(mixed.connections().edge_count() >= 24);
            assert_eq!(mixed.components().len(), 1);
        }
        let all = gen_dfs_percolation(s, &dfs, PercolationParams::new(1.0).unwrap(), &mut rng(0)).unwrap();
        assert_eq!(all.connections().edge_count(), 40);
    }

    #[test]
    fn same_stream_same_maze() {
        for spec in [
            GeneratorSpec::Dfs(DfsParams::default()),
            GeneratorSpec::Wilson,
            GeneratorSpec::Percolation(PercolationParams::default()),
            GeneratorSpec::DfsPercolation(DfsParams::default(), PercolationParams::new(0.1).unwrap()),
        ] {
            let a = spec.generate(shape(7, 5), &mut rng(11)).unwrap();
            let b = spec.generate(shape(7, 5), &mut rng(11)).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.meta().unwrap().algorithm, spec.name());
        }
    }
}
