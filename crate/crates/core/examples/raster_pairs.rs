//! Input/target image pairs for convolutional solvers.

use mazeforge::dataset::{generate_maze, MazeDatasetConfig};
use mazeforge::formats::{to_raster_pair, PixelGrid, RasterOptions, OPEN_RGB, PATH_RGB, WALL_RGB};
use mazeforge::generators::GeneratorSpec;

fn sketch(p: &PixelGrid) -> String {
    let mut out = String::new();
    for r in 0..p.height() {
        for c in 0..p.width() {
            out.push(match p.get(r, c) {
                WALL_RGB => '#',
                OPEN_RGB => ' ',
                PATH_RGB => '*',
                _ => 'o',
            });
        }
        out.push('\n');
    }
    out
}

fn main() -> mazeforge::Result<()> {
    let cfg = MazeDatasetConfig::new("raster", 4, 1, GeneratorSpec::parse_label("gen_dfs_percolation:p=0.2")?)?;
    let maze = generate_maze(&cfg, 0)?;
    for opts in [RasterOptions::default(), RasterOptions { include_endpoints: false, fill_empty: true }] {
        let (input, target) = to_raster_pair(&maze, opts);
        println!("{opts:?}");
        for (a, b) in sketch(&input).lines().zip(sketch(&target).lines()) {
            println!("  {a}   {b}");
        }
    }
    Ok(())
}
