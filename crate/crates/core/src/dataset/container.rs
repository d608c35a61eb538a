//! Single-file JSON container holding the config, filter history and mazes.
//!
//! ```text
//! {"format_version":"1.0","config":{...},"applied_filters":[...],"mazes":[
//! {"connection_list":{"down":[[0|1,...],...],"right":[[...]]},"origin":[i,j],"target":[i,j],"solution":[[i,j],...]},
//! ...
//! ]}
//! ```
//!
//! Output is canonical: nested maps have sorted keys, one maze per line, so
//! equal datasets always serialize to equal bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::{ConfigRecord, MazeDatasetConfig};
use super::MazeDataset;
use crate::error::{Error, Result};
use crate::filters::FilterRecord;
use crate::lattice::{ConnectionList, Coord, GridShape, LatticeMaze, SolvedMaze};

pub const FORMAT_VERSION: &str = "1.0";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConnectionRecord {
    down: Vec<Vec<u8>>,
    right: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MazeRecord {
    connection_list: ConnectionRecord,
    origin: [usize; 2],
    target: [usize; 2],
    solution: Vec<[usize; 2]>,
}

fn plane_rows(plane: &[bool], cols: usize) -> Vec<Vec<u8>> {
    plane.chunks(cols).map(|r| r.iter().map(|&b| u8::from(b)).collect()).collect()
}

fn maze_record(m: &SolvedMaze) -> MazeRecord {
    let conn = m.connections();
    let cols = m.shape().cols;
    let pair = |c: Coord| [c.row, c.col];
    MazeRecord {
        connection_list: ConnectionRecord {
            down: plane_rows(conn.down_plane(), cols),
            right: plane_rows(conn.right_plane(), cols),
        },
        origin: pair(m.origin()),
        target: pair(m.target()),
        solution: m.solution().iter().map(|&c| pair(c)).collect(),
    }
}

pub fn to_container_string(ds: &MazeDataset) -> String {
    let mut out = String::new();
    out.push_str("{\"format_version\":");
    out.push_str(&json(&FORMAT_VERSION));
    out.push_str(",\"config\":");
    out.push_str(&json(&ds.config.to_record()));
    out.push_str(",\"applied_filters\":");
    out.push_str(&json(&ds.applied_filters));
    out.push_str(",\"mazes\":[");
    for (i, m) in ds.mazes.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&json(&maze_record(m)));
    }
    out.push_str("\n]}\n");
    out
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("container values serialize")
}

fn plane_from_rows(rows: &[Vec<u8>], shape: GridShape, field: &str) -> Result<Vec<bool>> {
    if rows.len() != shape.rows {
        return Err(Error::load(field, format!("expected {} rows, found {}", shape.rows, rows.len())));
    }
    let mut out = Vec::with_capacity(shape.n_cells());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.cols {
            return Err(Error::load(
                format!("{field}[{i}]"),
                format!("expected {} entries, found {}", shape.cols, row.len()),
            ));
        }
        for (j, &b) in row.iter().enumerate() {
            match b {
                0 => out.push(false),
                1 => out.push(true),
                other => {
                    return Err(Error::load(format!("{field}[{i}][{j}]"), format!("bit must be 0 or 1, got {other}")))
                }
            }
        }
    }
    Ok(out)
}

fn maze_from_record(rec: MazeRecord, shape: GridShape, field: &str) -> Result<SolvedMaze> {
    let down_field = format!("{field}.connection_list.down");
    let right_field = format!("{field}.connection_list.right");
    let down = plane_from_rows(&rec.connection_list.down, shape, &down_field)?;
    let right = plane_from_rows(&rec.connection_list.right, shape, &right_field)?;
    if let Some(j) = (0..shape.cols).find(|&j| down[(shape.rows - 1) * shape.cols + j]) {
        return Err(Error::load(
            format!("{down_field}[{}][{j}]", shape.rows - 1),
            "periodic connection in last row violates the non-periodic invariant",
        ));
    }
    if let Some(i) = (0..shape.rows).find(|&i| right[i * shape.cols + shape.cols - 1]) {
        return Err(Error::load(
            format!("{right_field}[{i}][{}]", shape.cols - 1),
            "periodic connection in last column violates the non-periodic invariant",
        ));
    }
    let conn = ConnectionList::from_planes(shape, down, right).map_err(|e| Error::load(field, e))?;
    let coord = |p: [usize; 2]| Coord::new(p[0], p[1]);
    let solution: Vec<Coord> = rec.solution.iter().map(|&p| coord(p)).collect();
    if solution.first() != Some(&coord(rec.origin)) {
        return Err(Error::load(format!("{field}.origin"), "origin is not the first solution cell"));
    }
    if solution.last() != Some(&coord(rec.target)) {
        return Err(Error::load(format!("{field}.target"), "target is not the last solution cell"));
    }
    SolvedMaze::new(LatticeMaze::new(conn), solution).map_err(|e| Error::load(format!("{field}.solution"), e))
}

fn take_field<T: serde::de::DeserializeOwned>(obj: &mut serde_json::Map<String, Value>, key: &str) -> Result<T> {
    let v = obj.remove(key).ok_or_else(|| Error::load(key, "missing"))?;
    serde_json::from_value(v).map_err(|e| Error::load(key, e))
}

pub fn from_container_str(text: &str) -> Result<MazeDataset> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::load("<document>", e))?;
    let Value::Object(mut obj) = doc else {
        return Err(Error::load("<document>", "top level must be an object"));
    };
    match obj.get("format_version") {
        Some(Value::String(v)) if v == FORMAT_VERSION => {}
        Some(Value::String(v)) => {
            return Err(Error::Version { found: v.clone(), expected: FORMAT_VERSION.to_string() })
        }
        Some(other) => return Err(Error::load("format_version", format!("expected a string, got {other}"))),
        None => return Err(Error::load("format_version", "missing")),
    }
    obj.remove("format_version");

    let config_rec: ConfigRecord = take_field(&mut obj, "config")?;
    let config = MazeDatasetConfig::from_record(config_rec).map_err(|e| Error::load("config", e))?;
    let applied_filters: Vec<FilterRecord> = take_field(&mut obj, "applied_filters")?;
    let maze_values: Vec<Value> = take_field(&mut obj, "mazes")?;
    if let Some(extra) = obj.keys().next() {
        return Err(Error::load(extra.clone(), "unknown top-level field"));
    }

    let mut mazes = Vec::with_capacity(maze_values.len());
    for (i, v) in maze_values.into_iter().enumerate() {
        let field = format!("mazes[{i}]");
        let rec: MazeRecord = serde_json::from_value(v).map_err(|e| Error::load(&field, e))?;
        mazes.push(maze_from_record(rec, config.shape, &field)?);
    }
    if applied_filters.is_empty() && mazes.len() != config.n_mazes {
        return Err(Error::load(
            "mazes",
            format!("unfiltered dataset holds {} mazes, config says {}", mazes.len(), config.n_mazes),
        ));
    }
    Ok(MazeDataset { config, applied_filters, mazes })
}
