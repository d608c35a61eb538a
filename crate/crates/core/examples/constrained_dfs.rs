//! Depth-first search with a cell budget, a depth limit, or no forks.

use mazeforge::dataset::maze_rng;
use mazeforge::formats::to_ascii;
use mazeforge::generators::{gen_dfs, Budget, DfsParams};
use mazeforge::{Coord, GridShape, SolvedMaze};

fn show(title: &str, params: DfsParams) -> mazeforge::Result<()> {
    let shape = GridShape::square(7)?;
    let maze = gen_dfs(shape, &params, &mut maze_rng(5, 0))?;
    let reach = maze.largest_component();
    println!("{title}: {} of {} cells reachable", reach.len(), shape.n_cells());
    // show the longest solution within the reachable tree
    let origin = reach[0];
    let target = *reach.iter().max_by_key(|c| c.manhattan(origin)).unwrap();
    if origin != target {
        println!("{}", to_ascii(&SolvedMaze::solve(maze, origin, target)?));
    }
    Ok(())
}

fn main() -> mazeforge::Result<()> {
    let center = Some(Coord::new(3, 3));
    show(
        "budget of 15 cells",
        DfsParams { accessible_cells: Some(Budget::Absolute(15)), start_coord: center, ..Default::default() },
    )?;
    show(
        "half the grid",
        DfsParams { accessible_cells: Some(Budget::Fraction(0.5)), start_coord: center, ..Default::default() },
    )?;
    show(
        "depth at most 4",
        DfsParams { max_tree_depth: Some(Budget::Absolute(4)), start_coord: center, ..Default::default() },
    )?;
    show("single corridor", DfsParams { do_forks: false, start_coord: center, ..Default::default() })
}
