use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{GeneratorSpec, ParamMap};
use crate::lattice::GridShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndpointOptions {
    /// Smallest largest-component size that still counts as solvable.
    pub min_component_size: usize,
}

impl Default for EndpointOptions {
    fn default() -> Self {
        EndpointOptions { min_component_size: 2 }
    }
}

/// Everything needed to regenerate a dataset bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct MazeDatasetConfig {
    pub name: String,
    pub shape: GridShape,
    pub n_mazes: usize,
    pub generator: GeneratorSpec,
    pub seed: u64,
    pub endpoint_options: EndpointOptions,
}

impl MazeDatasetConfig {
    /// Square grid of side `grid_n`, seed 0.
    pub fn new(name: impl Into<String>, grid_n: usize, n_mazes: usize, generator: GeneratorSpec) -> Result<Self> {
        let cfg = MazeDatasetConfig {
            name: name.into(),
            shape: GridShape::square(grid_n)?,
            n_mazes,
            generator,
            seed: 0,
            endpoint_options: EndpointOptions::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_shape(mut self, rows: usize, cols: usize) -> Result<Self> {
        self.shape = GridShape::new(rows, cols)?;
        Ok(self)
    }

    pub fn with_endpoint_options(mut self, opts: EndpointOptions) -> Self {
        self.endpoint_options = opts;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_mazes == 0 {
            return Err(Error::invalid("n_mazes must be at least 1"));
        }
        if self.endpoint_options.min_component_size < 2 {
            return Err(Error::invalid("min_component_size must be at least 2"));
        }
        Ok(())
    }

    pub(crate) fn to_record(&self) -> ConfigRecord {
        ConfigRecord {
            endpoint_options: self.endpoint_options,
            generator: self.generator.name().to_string(),
            generator_params: self.generator.params(),
            grid_cols: self.shape.cols,
            grid_rows: self.shape.rows,
            n_mazes: self.n_mazes,
            name: self.name.clone(),
            seed: self.seed,
        }
    }

    pub(crate) fn from_record(rec: ConfigRecord) -> Result<Self> {
        let cfg = MazeDatasetConfig {
            name: rec.name,
            shape: GridShape::new(rec.grid_rows, rec.grid_cols)?,
            n_mazes: rec.n_mazes,
            generator: GeneratorSpec::from_name_params(&rec.generator, &rec.generator_params)?,
            seed: rec.seed,
            endpoint_options: rec.endpoint_options,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Canonical JSON (sorted keys, compact).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("config serializes")
    }
}

/// On-disk config; fields kept in alphabetical order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ConfigRecord {
    pub endpoint_options: EndpointOptions,
    pub generator: String,
    pub generator_params: ParamMap,
    pub grid_cols: usize,
    pub grid_rows: usize,
    pub n_mazes: usize,
    pub name: String,
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{DfsParams, PercolationParams};

    #[test]
    fn canonical_json() {
        let cfg = MazeDatasetConfig::new(
            "demo",
            3,
            32,
            GeneratorSpec::DfsPercolation(DfsParams::default(), PercolationParams::new(0.1).unwrap()),
        )
        .unwrap()
        .with_seed(42);
        assert_eq!(
            cfg.to_json(),
            r#"{"endpoint_options":{"min_component_size":2},"generator":"gen_dfs_percolation","generator_params":{"p":0.1},"grid_cols":3,"grid_rows":3,"n_mazes":32,"name":"demo","seed":42}"#
        );
        let back = MazeDatasetConfig::from_record(serde_json::from_str(&cfg.to_json()).unwrap()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn validation() {
        assert!(MazeDatasetConfig::new("x", 3, 0, GeneratorSpec::Wilson).is_err());
        assert!(MazeDatasetConfig::new("x", 0, 3, GeneratorSpec::Wilson).is_err());
        let cfg = MazeDatasetConfig::new("x", 3, 3, GeneratorSpec::Wilson)
            .unwrap()
            .with_endpoint_options(EndpointOptions { min_component_size: 1 });
        assert!(cfg.validate().is_err());
    }
}
