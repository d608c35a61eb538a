//! Filtering with a user predicate. The record is kept in the history, but a
//! dataset carrying one cannot be regenerated.

use std::collections::BTreeMap;

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let cfg = MazeDatasetConfig::new("custom", 5, 200, GeneratorSpec::parse_label("gen_dfs_percolation:p=0.15")?)?;
    let ds = MazeDataset::generate(cfg, 1)?;
    let before = ds.len();

    let max_turns = 4;
    let ds = ds.filter_custom("max_turns", BTreeMap::from([("max_turns".into(), max_turns.into())]), |m| {
        let turns = m.solution().windows(3).filter(|w| (w[0].row == w[1].row) != (w[1].row == w[2].row)).count();
        turns <= max_turns
    });
    println!("{before} -> {} mazes with at most {max_turns} turns", ds.len());
    println!("history: {:?}", ds.applied_filters);
    match ds.regenerate(1) {
        Ok(_) => unreachable!(),
        Err(e) => println!("regenerate: {e}"),
    }
    Ok(())
}
