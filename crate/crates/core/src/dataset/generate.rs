use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::MazeDatasetConfig;
use crate::error::{Error, Result};
use crate::lattice::SolvedMaze;
use crate::solve::select_endpoints_min;

/// Attempts per maze index before generation gives up.
pub const MAX_ATTEMPTS: u64 = 10;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of maze `index`: the `(index + 1)`-th output of a SplitMix64 stream
/// seeded with `global_seed`. Distinct indices never collide for a fixed
/// global seed.
pub fn derive_maze_seed(global_seed: u64, index: u64) -> u64 {
    splitmix64_mix(global_seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// The random stream for one attempt at one maze.
pub fn maze_rng(maze_seed: u64, attempt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(maze_seed);
    rng.set_stream(attempt);
    rng
}

/// Generates, picks endpoints for, and solves maze `index` of `cfg`.
///
/// Unsolvable draws (largest component too small) retry on the next
/// sub-stream, up to [`MAX_ATTEMPTS`] in total.
pub fn generate_maze(cfg: &MazeDatasetConfig, index: usize) -> Result<SolvedMaze> {
    let seed = derive_maze_seed(cfg.seed, index as u64);
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = maze_rng(seed, attempt);
        let mut maze = cfg.generator.generate(cfg.shape, &mut rng)?;
        let (origin, target) = match select_endpoints_min(&maze, cfg.endpoint_options.min_component_size, &mut rng) {
            Ok(pair) => pair,
            Err(Error::Unsolvable { .. }) => continue,
            Err(e) => return Err(e),
        };
        if let Some(meta) = maze.meta().cloned() {
            maze = maze.with_meta(crate::lattice::GenerationMeta { seed: Some(seed), attempt, ..meta });
        }
        return SolvedMaze::solve(maze, origin, target);
    }
    Err(Error::GenerationExhausted { index, attempts: MAX_ATTEMPTS as usize, config: cfg.to_json() })
}

/// Generates all mazes of `cfg` on up to `workers` threads. The output does
/// not depend on `workers`.
pub fn generate_mazes(cfg: &MazeDatasetConfig, workers: usize) -> Result<Vec<SolvedMaze>> {
    cfg.validate()?;
    if workers == 0 {
        return Err(Error::invalid("workers must be at least 1"));
    }
    let results: Vec<Result<SolvedMaze>> = if workers == 1 {
        (0..cfg.n_mazes).map(|i| generate_maze(cfg, i)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start {workers} workers: {e}")))?;
        pool.install(|| (0..cfg.n_mazes).into_par_iter().map(|i| generate_maze(cfg, i)).collect())
    };
    // first failing index wins, regardless of scheduling
    results.into_iter().collect()
}
