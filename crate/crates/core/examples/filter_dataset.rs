//! Chains built-in filters and shows the recorded history.

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::filters::Filter;
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let cfg = MazeDatasetConfig::new("filtered", 4, 500, GeneratorSpec::Wilson)?.with_seed(1);
    let ds = MazeDataset::generate(cfg, 1)?;
    println!("generated: {}", ds.len());

    let ds = ds.filter(Filter::RemoveDuplicatesFast)?;
    println!("after exact dedup: {}", ds.len());
    let ds = ds.filter(Filter::RemoveDuplicates { min_hamming: 6 })?;
    println!("after near-dedup (hamming < 6): {}", ds.len());
    let ds = ds.filter(Filter::PathLength { min_length: 5 })?;
    println!("solutions of 5+ steps: {}", ds.len());
    let ds = ds.filter(Filter::StartEndDistance { min_distance: 3 })?;
    println!("endpoints 3+ apart: {}", ds.len());

    for rec in &ds.applied_filters {
        println!("  {} {:?}", rec.name, rec.params);
    }
    // the history replays from the config alone
    assert_eq!(ds.regenerate(1)?, ds);
    Ok(())
}
