//! Reproducible 2D lattice maze datasets.
//!
//! A maze is a [`LatticeMaze`]: a rectangular grid whose adjacent cells are
//! joined or separated by walls. Generators in [`generators`] draw mazes from
//! a seeded random stream, [`solve`] picks endpoints and finds shortest paths,
//! and [`formats`] converts a [`SolvedMaze`] to and from ASCII, RGB pixels and
//! token sequences without loss. [`dataset`] ties these together into
//! configurable, filterable, persisted collections that regenerate bit for bit
//! from their config, on any number of worker threads.
//!
//! ```
//! use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
//! use mazeforge::generators::{DfsParams, GeneratorSpec};
//!
//! let cfg = MazeDatasetConfig::new("demo", 3, 4, GeneratorSpec::Dfs(DfsParams::default()))?
//!     .with_seed(42);
//! let ds = MazeDataset::generate(cfg, 1)?;
//! assert_eq!(ds.len(), 4);
//! println!("{}", mazeforge::formats::to_ascii(&ds.mazes[0]));
//! # Ok::<(), mazeforge::Error>(())
//! ```

pub mod cli;
pub mod dataset;
pub mod error;
pub mod filters;
pub mod formats;
pub mod generators;
pub mod lattice;
pub mod solve;

pub use error::{Error, ParseError, Position, Result};
pub use lattice::{ConnectionList, Coord, GridShape, LatticeMaze, SolvedMaze};
