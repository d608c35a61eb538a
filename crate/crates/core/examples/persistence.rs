//! Saving and loading the JSON container, and regenerating from config alone.

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::filters::Filter;
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let cfg =
        MazeDatasetConfig::new("saved", 4, 16, GeneratorSpec::parse_label("gen_percolation:p=0.6")?)?.with_seed(2024);
    let ds = MazeDataset::generate(cfg, 4)?.filter(Filter::PathLength { min_length: 3 })?;

    let path = std::env::temp_dir().join("mazeforge-persistence.json");
    ds.save(&path)?;
    let loaded = MazeDataset::load(&path)?;
    assert_eq!(loaded, ds);
    assert_eq!(loaded.to_container_string(), std::fs::read_to_string(&path)?);

    let text = ds.to_container_string();
    for line in text.lines().take(3) {
        println!("{}", &line[..line.len().min(110)]);
    }
    println!("... {} mazes, {} bytes at {}", loaded.len(), text.len(), path.display());

    assert_eq!(loaded.regenerate(1)?, ds);
    println!("regenerated identically from config and filter history");
    Ok(())
}
