//! Dataset configuration, generation, persistence and benchmarking.

mod benchmark;
mod config;
mod container;
mod generate;

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::Value;

pub use benchmark::{run_benchmark, BenchmarkRow, BenchmarkTable, SizeClass, WARMUP_ITERATIONS};
pub use config::{EndpointOptions, MazeDatasetConfig};
pub use container::FORMAT_VERSION;
pub use generate::{derive_maze_seed, generate_maze, generate_mazes, maze_rng, MAX_ATTEMPTS};

use crate::error::{Error, Result};
use crate::filters::{Filter, FilterRecord};
use crate::formats::{self, CoordScheme, TokenSequence};
use crate::lattice::SolvedMaze;

/// Random sub-stream used to shuffle adjacency lists when rendering tokens.
const TOKEN_STREAM: u64 = u64::MAX;

/// A generated dataset and the metadata that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct MazeDataset {
    pub config: MazeDatasetConfig,
    pub applied_filters: Vec<FilterRecord>,
    pub mazes: Vec<SolvedMaze>,
}

impl MazeDataset {
    /// Generates every maze of `cfg` using up to `workers` threads.
    pub fn generate(cfg: MazeDatasetConfig, workers: usize) -> Result<Self> {
        let mazes = generate_mazes(&cfg, workers)?;
        Ok(MazeDataset { config: cfg, applied_filters: Vec::new(), mazes })
    }

    /// Regenerates from the embedded config and replays the filter history.
    pub fn regenerate(&self, workers: usize) -> Result<Self> {
        let mut ds = Self::generate(self.config.clone(), workers)?;
        for rec in &self.applied_filters {
            ds = ds.filter(Filter::from_record(rec)?)?;
        }
        Ok(ds)
    }

    pub fn len(&self) -> usize {
        self.mazes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mazes.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<&SolvedMaze> {
        self.mazes.get(index).ok_or_else(|| {
            Error::invalid(format!("index {index} out of range for dataset of {} mazes", self.mazes.len()))
        })
    }

    /// Applies a built-in filter and records it.
    pub fn filter(mut self, filter: Filter) -> Result<Self> {
        self.mazes = filter.apply(&self.mazes)?;
        self.applied_filters.push(filter.record());
        Ok(self)
    }

    /// Applies a user predicate, recording it under `name` with `params`.
    /// Datasets carrying custom records cannot be [`regenerate`](Self::regenerate)d.
    pub fn filter_custom<F>(mut self, name: &str, params: BTreeMap<String, Value>, mut keep: F) -> Self
    where
        F: FnMut(&SolvedMaze) -> bool,
    {
        self.mazes.retain(|m| keep(m));
        self.applied_filters.push(FilterRecord { name: name.to_string(), params });
        self
    }

    /// Token rendering of maze `index` with a shuffle seeded from the dataset
    /// seed, so repeated renders agree.
    pub fn tokens(&self, index: usize, scheme: CoordScheme) -> Result<TokenSequence> {
        let maze = self.get(index)?;
        let mut rng = maze_rng(derive_maze_seed(self.config.seed, index as u64), TOKEN_STREAM);
        Ok(formats::to_tokens(maze, scheme, &mut rng))
    }

    pub fn to_container_string(&self) -> String {
        container::to_container_string(self)
    }

    pub fn from_container_str(text: &str) -> Result<Self> {
        container::from_container_str(text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_container_string())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_container_str(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{DfsParams, GeneratorSpec};

    fn small() -> MazeDataset {
        let cfg = MazeDatasetConfig::new("t", 3, 8, GeneratorSpec::Dfs(DfsParams::default())).unwrap().with_seed(42);
        MazeDataset::generate(cfg, 1).unwrap()
    }

    #[test]
    fn container_round_trip() {
        let ds = small();
        let text = ds.to_container_string();
        assert!(text.starts_with("{\"format_version\":\"1.0\",\"config\":{"));
        let back = MazeDataset::from_container_str(&text).unwrap();
        assert_eq!(back, ds);
        assert_eq!(back.to_container_string(), text);
    }

    #[test]
    fn version_mismatch() {
        let text = small().to_container_string().replace("\"1.0\"", "\"0.9\"");
        match MazeDataset::from_container_str(&text) {
            Err(Error::Version { found, .. }) => assert_eq!(found, "0.9"),
            other => panic!("expected version error, got {other:?}"),
        }
    }

    #[test]
    fn periodic_bit_rejected_on_load() {
        let ds = small();
        let text = ds.to_container_string();
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        // last row of the first down plane sits just before `],"right"`
        let line = &mut lines[1];
        let pos = line.find("],\"right\"").unwrap();
        line.replace_range(pos - 6..pos - 1, "0,0,1");
        let err = MazeDataset::from_container_str(&lines.join("\n")).unwrap_err();
        match err {
            Error::Load { field, message } => {
                assert_eq!(field, "mazes[0].connection_list.down[2][2]");
                assert!(message.contains("non-periodic"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_errors_name_the_field() {
        let text = small().to_container_string();
        let bad = text.replacen("\"origin\"", "\"origen\"", 1);
        assert!(matches!(MazeDataset::from_container_str(&bad), Err(Error::Load { field, .. }) if field == "mazes[0]"));
        let bad = text.replacen("\"n_mazes\":8", "\"n_mazes\":9", 1);
        assert!(matches!(MazeDataset::from_container_str(&bad), Err(Error::Load { field, .. }) if field == "mazes"));
        let bad = text.replacen("\"gen_dfs\"", "\"gen_prim\"", 1);
        assert!(matches!(MazeDataset::from_container_str(&bad), Err(Error::Load { field, .. }) if field == "config"));
    }

    #[test]
    fn filters_are_recorded_and_replayable() {
        let ds = small().filter(Filter::PathLength { min_length: 3 }).unwrap();
        assert_eq!(ds.applied_filters.len(), 1);
        assert!(ds.mazes.iter().all(|m| m.path_length() >= 3));
        assert_eq!(ds.regenerate(2).unwrap(), ds);

        let custom = small().filter_custom("corner_origin", BTreeMap::new(), |m| m.origin().row == 0);
        assert_eq!(custom.applied_filters[0].name, "corner_origin");
        assert!(custom.regenerate(1).is_err());
    }

    #[test]
    fn token_render_is_deterministic() {
        let ds = small();
        assert_eq!(ds.tokens(3, CoordScheme::Single).unwrap(), ds.tokens(3, CoordScheme::Single).unwrap());
        assert!(ds.tokens(8, CoordScheme::Single).is_err());
    }
}
