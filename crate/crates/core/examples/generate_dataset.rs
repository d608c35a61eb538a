//! Builds a small dataset with each generator and prints the first maze of each.
//!
//! cargo run --example generate_dataset

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::formats::to_ascii;
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for label in ["gen_dfs", "gen_wilson", "gen_percolation:p=0.55", "gen_dfs_percolation:p=0.1"] {
        let cfg = MazeDatasetConfig::new("demo", 6, 32, GeneratorSpec::parse_label(label)?)?.with_seed(42);
        let ds = MazeDataset::generate(cfg, workers)?;
        let mean = ds.mazes.iter().map(|m| m.path_length()).sum::<usize>() as f64 / ds.len() as f64;
        println!("{label}: {} mazes, mean solution length {mean:.2}", ds.len());
        println!("{}", to_ascii(&ds.mazes[0]));
    }
    Ok(())
}
