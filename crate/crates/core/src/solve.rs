//! Shortest-path solving and endpoint selection.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Coord, LatticeMaze};

/// A* search with a Manhattan heuristic.
///
/// Neighbours are expanded in the order of [`LatticeMaze::neighbors`] and
/// frontier entries with equal f-score pop in insertion order, so repeated
/// calls always return the same path even when several shortest paths exist.
pub fn solve_shortest_path(maze: &LatticeMaze, origin: Coord, target: Coord) -> Result<Vec<Coord>> {
    let shape = maze.shape();
    shape.check(origin)?;
    shape.check(target)?;
    if origin == target {
        return Ok(vec![origin]);
    }

    let n = shape.n_cells();
    let mut g = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut closed = vec![false; n];
    // (f, insertion sequence, cell index); both reversed for a min-heap
    let mut open: BinaryHeap<(Reverse<usize>, Reverse<u64>, usize)> = BinaryHeap::new();
    let mut seq = 0u64;

    let start = shape.index(origin);
    let goal = shape.index(target);
    g[start] = 0;
    open.push((Reverse(origin.manhattan(target)), Reverse(seq), start));

    while let Some((_, _, idx)) = open.pop() {
        if closed[idx] {
            continue;
        }
        if idx == goal {
            let mut path = vec![target];
            let mut cur = idx;
            while cur != start {
                cur = parent[cur];
                path.push(shape.coord(cur));
            }
            path.reverse();
            return Ok(path);
        }
        closed[idx] = true;
        let here = shape.coord(idx);
        let next_g = g[idx] + 1;
        for nb in maze.open_neighbors(here) {
            let nidx = shape.index(nb);
            if closed[nidx] || next_g >= g[nidx] {
                continue;
            }
            g[nidx] = next_g;
            parent[nidx] = idx;
            seq += 1;
            open.push((Reverse(next_g + nb.manhattan(target)), Reverse(seq), nidx));
        }
    }
    Err(Error::NoPath { origin, target })
}

/// Two distinct cells drawn uniformly without replacement from the largest
/// connected component.
pub fn select_endpoints<R: Rng + ?Sized>(maze: &LatticeMaze, rng: &mut R) -> Result<(Coord, Coord)> {
    select_endpoints_min(maze, 2, rng)
}

/// Like [`select_endpoints`] but requires the largest component to hold at
/// least `min_component_size` cells (never fewer than 2).
pub fn select_endpoints_min<R: Rng + ?Sized>(
    maze: &LatticeMaze,
    min_component_size: usize,
    rng: &mut R,
) -> Result<(Coord, Coord)> {
    let required = min_component_size.max(2);
    let component = maze.largest_component();
    if component.len() < required {
        return Err(Error::Unsolvable { size: component.len(), required });
    }
    let n = component.len();
    let first = rng.gen_range(0..n);
    let mut second = rng.gen_range(0..n - 1);
    if second >= first {
        second += 1;
    }
    Ok((component[first], component[second]))
}
