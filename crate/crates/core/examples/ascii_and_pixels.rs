//! ASCII and RGB renderings, parsed back to the same maze. Writes `maze.ppm`
//! and `maze.png` to the directory given as the first argument (default: a
//! temporary directory).

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use mazeforge::dataset::{generate_maze, MazeDatasetConfig};
use mazeforge::formats::{from_ascii, from_pixels, to_ascii, to_pixels};
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let cfg = MazeDatasetConfig::new("render", 5, 1, GeneratorSpec::Wilson)?.with_seed(3);
    let maze = generate_maze(&cfg, 0)?;

    let ascii = to_ascii(&maze);
    print!("{ascii}");
    assert_eq!(from_ascii(&ascii.to_string().parse()?)?, maze);

    let px = to_pixels(&maze);
    println!("pixels: {:?}", px.shape());
    assert_eq!(from_pixels(&px)?, maze);

    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    px.write_ppm(BufWriter::new(File::create(dir.join("maze.ppm"))?))?;
    px.write_png(BufWriter::new(File::create(dir.join("maze.png"))?))?;
    println!("wrote {}/maze.ppm and maze.png", dir.display());
    Ok(())
}
