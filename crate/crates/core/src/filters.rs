//! Dataset filters. Each keeps the relative order of the mazes it retains and
//! is idempotent.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{GridShape, SolvedMaze};

pub const PATH_LENGTH: &str = "path_length";
pub const START_END_DISTANCE: &str = "start_end_distance";
pub const REMOVE_DUPLICATES: &str = "remove_duplicates";
pub const REMOVE_DUPLICATES_FAST: &str = "remove_duplicates_fast";

/// A filter application as stored in dataset metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterRecord {
    pub name: String,
    pub params: BTreeMap<String, Value>,
}

/// Keeps mazes whose solution has at least `min_length` edges.
pub fn filter_path_length(mazes: &[SolvedMaze], min_length: usize) -> Vec<SolvedMaze> {
    mazes.iter().filter(|m| m.path_length() >= min_length).cloned().collect()
}

/// Keeps mazes whose endpoints are at least `min_distance` apart in Manhattan
/// distance, walls ignored.
pub fn filter_start_end_distance(mazes: &[SolvedMaze], min_distance: usize) -> Vec<SolvedMaze> {
    mazes.iter().filter(|m| m.origin().manhattan(m.target()) >= min_distance).cloned().collect()
}

/// Connection bits followed by one-hot origin and target grids, packed into words.
fn similarity_key(m: &SolvedMaze) -> Vec<u64> {
    let shape = m.shape();
    let n = shape.n_cells();
    let mut words = vec![0u64; (4 * n).div_ceil(64)];
    let mut set = |bit: usize| words[bit / 64] |= 1 << (bit % 64);
    let conn = m.connections();
    for (i, _) in conn.down_plane().iter().enumerate().filter(|(_, b)| **b) {
        set(i);
    }
    for (i, _) in conn.right_plane().iter().enumerate().filter(|(_, b)| **b) {
        set(n + i);
    }
    set(2 * n + shape.index(m.origin()));
    set(3 * n + shape.index(m.target()));
    words
}

fn hamming(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones()).sum()
}

fn common_shape(mazes: &[SolvedMaze]) -> Result<Option<GridShape>> {
    let Some(first) = mazes.first() else { return Ok(None) };
    let shape = first.shape();
    if let Some((i, m)) = mazes.iter().enumerate().find(|(_, m)| m.shape() != shape) {
        return Err(Error::invalid(format!("maze {i} has shape {}, expected {shape}", m.shape())));
    }
    Ok(Some(shape))
}

/// Drops every maze whose similarity key is within Hamming distance
/// `< min_hamming` of a maze already kept. Pairwise, O(n²).
pub fn remove_duplicates(mazes: &[SolvedMaze], min_hamming: u32) -> Result<Vec<SolvedMaze>> {
    common_shape(mazes)?;
    let mut kept_keys: Vec<Vec<u64>> = Vec::new();
    let mut out = Vec::new();
    for m in mazes {
        let key = similarity_key(m);
        if kept_keys.iter().all(|k| hamming(k, &key) >= min_hamming) {
            kept_keys.push(key);
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// Canonical bytes of a solved maze: shape, both planes, endpoints, solution.
pub fn canonical_bytes(m: &SolvedMaze) -> Vec<u8> {
    let shape = m.shape();
    let n = shape.n_cells();
    let mut out = Vec::with_capacity(16 + n / 4 + 8 * m.solution().len());
    out.extend((shape.rows as u32).to_le_bytes());
    out.extend((shape.cols as u32).to_le_bytes());
    let conn = m.connections();
    let mut pack = |plane: &[bool]| {
        for chunk in plane.chunks(8) {
            out.push(chunk.iter().enumerate().fold(0u8, |acc, (i, b)| acc | (u8::from(*b) << i)));
        }
    };
    pack(conn.down_plane());
    pack(conn.right_plane());
    for c in [m.origin(), m.target()].iter().chain(m.solution()) {
        out.extend((shape.index(*c) as u32).to_le_bytes());
    }
    out
}

/// Keeps the first occurrence of each exactly identical maze.
pub fn remove_duplicates_fast(mazes: &[SolvedMaze]) -> Vec<SolvedMaze> {
    let mut seen = HashSet::with_capacity(mazes.len());
    mazes.iter().filter(|m| seen.insert(canonical_bytes(m))).cloned().collect()
}

/// The built-in filters, reconstructible from their [`FilterRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    PathLength { min_length: usize },
    StartEndDistance { min_distance: usize },
    RemoveDuplicates { min_hamming: u32 },
    RemoveDuplicatesFast,
}

impl Filter {
    pub fn name(&self) -> &'static str {
        match self {
            Filter::PathLength { .. } => PATH_LENGTH,
            Filter::StartEndDistance { .. } => START_END_DISTANCE,
            Filter::RemoveDuplicates { .. } => REMOVE_DUPLICATES,
            Filter::RemoveDuplicatesFast => REMOVE_DUPLICATES_FAST,
        }
    }

    pub fn apply(&self, mazes: &[SolvedMaze]) -> Result<Vec<SolvedMaze>> {
        Ok(match *self {
            Filter::PathLength { min_length } => filter_path_length(mazes, min_length),
            Filter::StartEndDistance { min_distance } => filter_start_end_distance(mazes, min_distance),
            Filter::RemoveDuplicates { min_hamming } => remove_duplicates(mazes, min_hamming)?,
            Filter::RemoveDuplicatesFast => remove_duplicates_fast(mazes),
        })
    }

    pub fn record(&self) -> FilterRecord {
        let mut params = BTreeMap::new();
        match *self {
            Filter::PathLength { min_length } => {
                params.insert("min_length".into(), Value::from(min_length as u64));
            }
            Filter::StartEndDistance { min_distance } => {
                params.insert("min_distance".into(), Value::from(min_distance as u64));
            }
            Filter::RemoveDuplicates { min_hamming } => {
                params.insert("min_hamming".into(), Value::from(min_hamming));
            }
            Filter::RemoveDuplicatesFast => {}
        }
        FilterRecord { name: self.name().to_string(), params }
    }

    /// Parses and validates a filter name with its parameters.
    pub fn from_record(rec: &FilterRecord) -> Result<Self> {
        let int = |key: &str, min: u64| -> Result<u64> {
            let v = rec.params.get(key).ok_or_else(|| Error::invalid(format!("filter {} needs `{key}`", rec.name)))?;
            v.as_u64()
                .filter(|&x| x >= min)
                .ok_or_else(|| Error::invalid(format!("`{key}` must be an integer >= {min}, got {v}")))
        };
        let (filter, keys): (Filter, &[&str]) = match rec.name.as_str() {
            PATH_LENGTH => (Filter::PathLength { min_length: int("min_length", 1)? as usize }, &["min_length"]),
            START_END_DISTANCE => {
                (Filter::StartEndDistance { min_distance: int("min_distance", 0)? as usize }, &["min_distance"])
            }
            REMOVE_DUPLICATES => {
                let k = int("min_hamming", 1)?;
                let k = u32::try_from(k).map_err(|_| Error::invalid("`min_hamming` too large"))?;
                (Filter::RemoveDuplicates { min_hamming: k }, &["min_hamming"])
            }
            REMOVE_DUPLICATES_FAST => (Filter::RemoveDuplicatesFast, &[]),
            other => return Err(Error::invalid(format!("unknown filter `{other}`"))),
        };
        if let Some(extra) = rec.params.keys().find(|k| !keys.contains(&k.as_str())) {
            return Err(Error::invalid(format!("unknown parameter `{extra}` for filter {}", rec.name)));
        }
        Ok(filter)
    }
}
