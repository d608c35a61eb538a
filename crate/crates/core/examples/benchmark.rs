//! Times every generator at a few grid sizes and prints the CSV table and a
//! per-size-class summary.
//!
//! cargo run --release --example benchmark -- [n_per_cell]

use mazeforge::dataset::run_benchmark;
use mazeforge::generators::GeneratorSpec;

fn main() -> mazeforge::Result<()> {
    let n_per_cell = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let specs = [
        "gen_dfs",
        "gen_dfs:do_forks=false",
        "gen_dfs:accessible_cells=0.5",
        "gen_wilson",
        "gen_percolation",
        "gen_dfs_percolation:p=0.1",
    ]
    .iter()
    .map(|l| GeneratorSpec::parse_label(l))
    .collect::<mazeforge::Result<Vec<_>>>()?;

    let table = run_benchmark(&[5, 16, 40], &specs, n_per_cell, 0)?;
    print!("{}", table.to_csv_string());
    println!();
    for (label, class, mean_ms) in table.class_summary() {
        println!("{:<40} {:<7} {mean_ms:>10.4} ms", label, class.name());
    }
    Ok(())
}
