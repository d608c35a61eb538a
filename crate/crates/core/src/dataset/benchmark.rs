//! Single-threaded timing of per-maze generation across algorithms and sizes.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use super::config::MazeDatasetConfig;
use super::generate::generate_maze;
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;

/// Discarded mazes generated before timing each cell.
pub const WARMUP_ITERATIONS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SizeClass {
    /// g ≤ 10
    Small,
    /// 10 < g ≤ 32
    Medium,
    /// g > 32
    Large,
}

impl SizeClass {
    pub fn of(grid_n: usize) -> Self {
        match grid_n {
            0..=10 => SizeClass::Small,
            11..=32 => SizeClass::Medium,
            _ => SizeClass::Large,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SizeClass::Small => "small",
            SizeClass::Medium => "medium",
            SizeClass::Large => "large",
        }
    }
}

/// One (algorithm, size) cell. Serializes to the CSV columns.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkRow {
    pub algorithm: String,
    /// Canonical parameter map as compact JSON.
    pub params: String,
    pub grid_n: usize,
    pub n_mazes: usize,
    pub mean_ms: f64,
    pub median_ms: f64,
}

impl BenchmarkRow {
    pub fn size_class(&self) -> SizeClass {
        SizeClass::of(self.grid_n)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchmarkTable {
    pub rows: Vec<BenchmarkRow>,
}

impl BenchmarkTable {
    /// The row for `spec` at size `grid_n`, if measured.
    pub fn row(&self, spec: &GeneratorSpec, grid_n: usize) -> Option<&BenchmarkRow> {
        let params = params_json(spec);
        self.rows.iter().find(|r| r.algorithm == spec.name() && r.params == params && r.grid_n == grid_n)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        for row in &self.rows {
            wtr.serialize(row).map_err(|e| Error::Io(e.into()))?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    /// Mean of the per-cell means for each (algorithm+params, size class), in
    /// order of first appearance.
    pub fn class_summary(&self) -> Vec<(String, SizeClass, f64)> {
        let mut groups: Vec<(String, SizeClass, Vec<f64>)> = Vec::new();
        for r in &self.rows {
            let label = if r.params == "{}" { r.algorithm.clone() } else { format!("{} {}", r.algorithm, r.params) };
            let class = r.size_class();
            match groups.iter_mut().find(|(l, c, _)| *l == label && *c == class) {
                Some(g) => g.2.push(r.mean_ms),
                None => groups.push((label, class, vec![r.mean_ms])),
            }
        }
        groups
            .into_iter()
            .map(|(l, c, v)| {
                let mean = v.iter().sum::<f64>() / v.len() as f64;
                (l, c, mean)
            })
            .collect()
    }
}

fn params_json(spec: &GeneratorSpec) -> String {
    serde_json::to_string(&spec.params()).expect("params serialize")
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Times `n_per_cell` mazes for every (algorithm, size) pair on the calling
/// thread. Each maze is timed individually through the full
/// generate/select/solve pipeline. Rows are ordered by size class, then by the
/// order of `algorithms`, then by size.
pub fn run_benchmark(
    sizes: &[usize],
    algorithms: &[GeneratorSpec],
    n_per_cell: usize,
    seed: u64,
) -> Result<BenchmarkTable> {
    if n_per_cell == 0 {
        return Err(Error::invalid("n_per_cell must be at least 1"));
    }
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();

    let mut rows = Vec::new();
    for class in [SizeClass::Small, SizeClass::Medium, SizeClass::Large] {
        for spec in algorithms {
            for &g in sizes.iter().filter(|&&g| SizeClass::of(g) == class) {
                let cfg = MazeDatasetConfig::new("benchmark", g, n_per_cell + WARMUP_ITERATIONS, spec.clone())?
                    .with_seed(seed);
                for i in 0..WARMUP_ITERATIONS {
                    generate_maze(&cfg, n_per_cell + i)?;
                }
                let mut times = Vec::with_capacity(n_per_cell);
                for i in 0..n_per_cell {
                    let start = Instant::now();
                    let maze = generate_maze(&cfg, i)?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                    std::hint::black_box(maze);
                }
                let mean = times.iter().sum::<f64>() / times.len() as f64;
                times.sort_by(f64::total_cmp);
                rows.push(BenchmarkRow {
                    algorithm: spec.name().to_string(),
                    params: params_json(spec),
                    grid_n: g,
                    n_mazes: n_per_cell,
                    mean_ms: mean,
                    median_ms: median(&times),
                });
            }
        }
    }
    Ok(BenchmarkTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{DfsParams, PercolationParams};

    #[test]
    fn size_classes() {
        assert_eq!(SizeClass::of(10), SizeClass::Small);
        assert_eq!(SizeClass::of(11), SizeClass::Medium);
        assert_eq!(SizeClass::of(32), SizeClass::Medium);
        assert_eq!(SizeClass::of(33), SizeClass::Large);
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&[1.0, 2.0, 3.0]), 2.0);
        assert_eq!(median(&[1.0, 2.0, 3.0, 5.0]), 2.5);
    }

    #[test]
    fn table_shape_and_csv() {
        let algos = [
            GeneratorSpec::Dfs(DfsParams::default()),
            GeneratorSpec::DfsPercolation(DfsParams::default(), PercolationParams::new(0.1).unwrap()),
        ];
        let t = run_benchmark(&[12, 4], &algos, 2, 0).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert_eq!(t.rows[0].grid_n, 4);
        assert_eq!(t.rows[2].grid_n, 12);
        assert!(t.row(&algos[1], 12).is_some());
        let csv = t.to_csv_string();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("algorithm,params,grid_n,n_mazes,mean_ms,median_ms"));
        assert!(lines.next().unwrap().starts_with("gen_dfs,{},4,2,"));
        assert!(csv.contains("gen_dfs_percolation,\"{\"\"p\"\":0.1}\",4,2,"));
        assert_eq!(t.class_summary().len(), 4);
    }
}
