//! Input/target image pairs for convolutional maze solvers.

use super::grid::{mark_endpoints, render_maze, Mark};
use super::pixels::PixelGrid;
use crate::lattice::SolvedMaze;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RasterOptions {
    /// Paint origin and target in both images.
    pub include_endpoints: bool,
    /// In the target, turn every corridor off the solution into wall instead of
    /// leaving it open.
    pub fill_empty: bool,
}

impl Default for RasterOptions {
    fn default() -> Self {
        RasterOptions { include_endpoints: true, fill_empty: false }
    }
}

/// Returns `(input, target)`: the maze without its path, and the same frame
/// showing only the solution.
pub fn to_raster_pair(sm: &SolvedMaze, opts: RasterOptions) -> (PixelGrid, PixelGrid) {
    let mut input = render_maze(sm.maze());
    if opts.include_endpoints {
        mark_endpoints(&mut input, sm.origin(), sm.target());
    }

    let blank = if opts.fill_empty { Mark::Wall } else { Mark::Open };
    let mut target: Vec<Vec<Mark>> = render_maze(sm.maze())
        .into_iter()
        .map(|row| row.into_iter().map(|m| if m == Mark::Wall { Mark::Wall } else { blank }).collect())
        .collect();
    super::grid::mark_path(&mut target, sm.solution());
    if opts.include_endpoints {
        mark_endpoints(&mut target, sm.origin(), sm.target());
    }

    (PixelGrid::from_marks(&input), PixelGrid::from_marks(&target))
}
