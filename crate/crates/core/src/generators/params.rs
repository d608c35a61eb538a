use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Number, Value};

use crate::error::{Error, Result};
use crate::lattice::Coord;

pub const GEN_DFS: &str = "gen_dfs";
pub const GEN_WILSON: &str = "gen_wilson";
pub const GEN_PERCOLATION: &str = "gen_percolation";
pub const GEN_DFS_PERCOLATION: &str = "gen_dfs_percolation";

/// Registered algorithm names.
pub const ALGORITHMS: [&str; 4] = [GEN_DFS, GEN_WILSON, GEN_PERCOLATION, GEN_DFS_PERCOLATION];

/// Percolation probability used when none is given.
pub const DEFAULT_PERCOLATION_P: f64 = 0.4;

pub type ParamMap = BTreeMap<String, Value>;

/// A size limit given either as an absolute count or as a fraction of the
/// number of grid cells. Integers are absolute; values in `(0, 1)` are fractions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Budget {
    Absolute(usize),
    Fraction(f64),
}

impl Budget {
    pub fn resolve(self, n_cells: usize) -> Result<usize> {
        let v = match self {
            Budget::Absolute(k) => k,
            Budget::Fraction(f) => (f * n_cells as f64).floor() as usize,
        };
        if v < 1 {
            return Err(Error::invalid(format!(
                "{self} resolves to {v} on a grid of {n_cells} cells; must be at least 1"
            )));
        }
        Ok(v)
    }

    fn from_value(key: &str, v: &Value) -> Result<Self> {
        let bad = || Error::invalid(format!("`{key}` must be a positive integer or a fraction in (0,1), got {v}"));
        if let Some(k) = v.as_u64() {
            return if k >= 1 { Ok(Budget::Absolute(k as usize)) } else { Err(bad()) };
        }
        let f = v.as_f64().ok_or_else(bad)?;
        if f > 0.0 && f < 1.0 {
            Ok(Budget::Fraction(f))
        } else if f >= 1.0 && f.fract() == 0.0 && f <= u32::MAX as f64 {
            Ok(Budget::Absolute(f as usize))
        } else {
            Err(bad())
        }
    }

    fn to_value(self) -> Value {
        match self {
            Budget::Absolute(k) => Value::from(k as u64),
            Budget::Fraction(f) => Number::from_f64(f).map(Value::Number).unwrap_or(Value::Null),
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Absolute(k) => write!(f, "{k}"),
            Budget::Fraction(x) => write!(f, "{x}"),
        }
    }
}

/// Options for randomized depth-first search.
#[derive(Debug, Clone, PartialEq)]
pub struct DfsParams {
    /// Stop after this many cells have been visited.
    pub accessible_cells: Option<Budget>,
    /// When false the walk stops at its first dead end instead of backtracking.
    pub do_forks: bool,
    /// No visited cell lies further than this from the start along the tree.
    pub max_tree_depth: Option<Budget>,
    /// Fixed start cell; random when `None`.
    pub start_coord: Option<Coord>,
}

impl Default for DfsParams {
    fn default() -> Self {
        DfsParams { accessible_cells: None, do_forks: true, max_tree_depth: None, start_coord: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PercolationParams {
    pub p: f64,
}

impl PercolationParams {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(format!("percolation p must lie in [0,1], got {p}")));
        }
        Ok(PercolationParams { p })
    }
}

impl Default for PercolationParams {
    fn default() -> Self {
        PercolationParams { p: DEFAULT_PERCOLATION_P }
    }
}

/// A generation algorithm together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Dfs(DfsParams),
    Wilson,
    Percolation(PercolationParams),
    DfsPercolation(DfsParams, PercolationParams),
}

impl GeneratorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSpec::Dfs(_) => GEN_DFS,
            GeneratorSpec::Wilson => GEN_WILSON,
            GeneratorSpec::Percolation(_) => GEN_PERCOLATION,
            GeneratorSpec::DfsPercolation(..) => GEN_DFS_PERCOLATION,
        }
    }

    /// Parses an algorithm name plus key/value parameters, rejecting unknown keys.
    pub fn from_name_params(name: &str, params: &ParamMap) -> Result<Self> {
        let mut seen: Vec<&str> = Vec::new();
        let spec = match name {
            GEN_DFS => GeneratorSpec::Dfs(parse_dfs(params, &mut seen)?),
            GEN_WILSON => GeneratorSpec::Wilson,
            GEN_PERCOLATION => GeneratorSpec::Percolation(parse_percolation(params, &mut seen)?),
            GEN_DFS_PERCOLATION => {
                GeneratorSpec::DfsPercolation(parse_dfs(params, &mut seen)?, parse_percolation(params, &mut seen)?)
            }
            other => {
                return Err(Error::invalid(format!(
                    "unknown algorithm `{other}` (expected one of {})",
                    ALGORITHMS.join(", ")
                )))
            }
        };
        if let Some(extra) = params.keys().find(|k| !seen.contains(&k.as_str())) {
            return Err(Error::invalid(format!("unknown parameter `{extra}` for {name}")));
        }
        Ok(spec)
    }

    /// Canonical parameter map: every non-default setting, nothing else.
    pub fn params(&self) -> ParamMap {
        let mut out = ParamMap::new();
        match self {
            GeneratorSpec::Dfs(d) => write_dfs(d, &mut out),
            GeneratorSpec::Wilson => {}
            GeneratorSpec::Percolation(p) => write_percolation(p, &mut out),
            GeneratorSpec::DfsPercolation(d, p) => {
                write_dfs(d, &mut out);
                write_percolation(p, &mut out);
            }
        }
        out
    }

    /// Compact `name` or `name:k=v:k=v` label, as used in benchmark output and the CLI.
    pub fn label(&self) -> String {
        let params = self.params();
        if params.is_empty() {
            return self.name().to_string();
        }
        let body: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}:{}", self.name(), body.join(":"))
    }

    /// Inverse of [`GeneratorSpec::label`]. Values parse as JSON, falling back to strings.
    pub fn parse_label(label: &str) -> Result<Self> {
        let mut parts = label.split(':');
        let name = parts.next().unwrap_or_default();
        let mut params = ParamMap::new();
        for kv in parts {
            let (k, v) = parse_kv(kv)?;
            params.insert(k, v);
        }
        Self::from_name_params(name, &params)
    }
}

/// Parses `key=value`, reading the value as JSON when possible.
pub fn parse_kv(kv: &str) -> Result<(String, Value)> {
    let (k, v) = kv.split_once('=').ok_or_else(|| Error::invalid(format!("expected key=value, got `{kv}`")))?;
    let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
    Ok((k.trim().to_string(), value))
}

fn parse_dfs<'a>(params: &'a ParamMap, seen: &mut Vec<&'a str>) -> Result<DfsParams> {
    let mut out = DfsParams::default();
    for (key, v) in params {
        match key.as_str() {
            "accessible_cells" => out.accessible_cells = Some(Budget::from_value(key, v)?),
            "max_tree_depth" => out.max_tree_depth = Some(Budget::from_value(key, v)?),
            "do_forks" => {
                out.do_forks =
                    v.as_bool().ok_or_else(|| Error::invalid(format!("`do_forks` must be a boolean, got {v}")))?
            }
            "start_coord" => out.start_coord = Some(coord_from_value(v)?),
            _ => continue,
        }
        seen.push(key);
    }
    Ok(out)
}

fn parse_percolation<'a>(params: &'a ParamMap, seen: &mut Vec<&'a str>) -> Result<PercolationParams> {
    match params.get_key_value("p") {
        Some((key, v)) => {
            seen.push(key);
            let p = v.as_f64().ok_or_else(|| Error::invalid(format!("`p` must be a number, got {v}")))?;
            PercolationParams::new(p)
        }
        None => Ok(PercolationParams::default()),
    }
}

fn write_dfs(d: &DfsParams, out: &mut ParamMap) {
    if let Some(b) = d.accessible_cells {
        out.insert("accessible_cells".into(), b.to_value());
    }
    if !d.do_forks {
        out.insert("do_forks".into(), Value::Bool(false));
    }
    if let Some(b) = d.max_tree_depth {
        out.insert("max_tree_depth".into(), b.to_value());
    }
    if let Some(c) = d.start_coord {
        out.insert("start_coord".into(), coord_to_value(c));
    }
}

fn write_percolation(p: &PercolationParams, out: &mut ParamMap) {
    let v = Number::from_f64(p.p).map(Value::Number).unwrap_or(Value::Null);
    out.insert("p".into(), v);
}

pub(crate) fn coord_to_value(c: Coord) -> Value {
    Value::Array(vec![Value::from(c.row as u64), Value::from(c.col as u64)])
}

pub(crate) fn coord_from_value(v: &Value) -> Result<Coord> {
    let bad = || Error::invalid(format!("expected a coordinate [row, col], got {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    match arr.as_slice() {
        [r, c] => Ok(Coord::new(r.as_u64().ok_or_else(bad)? as usize, c.as_u64().ok_or_else(bad)? as usize)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(pairs: &[(&str, Value)]) -> ParamMap {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn budget_conventions() {
        let abs = Budget::from_value("accessible_cells", &Value::from(20)).unwrap();
        assert_eq!(abs, Budget::Absolute(20));
        assert_eq!(abs.resolve(36).unwrap(), 20);
        let frac = Budget::from_value("max_tree_depth", &serde_json::json!(0.5)).unwrap();
        assert_eq!(frac, Budget::Fraction(0.5));
        assert_eq!(frac.resolve(36).unwrap(), 18);
        assert!(Budget::Fraction(0.1).resolve(4).is_err());
        assert!(Budget::from_value("x", &Value::from(0)).is_err());
        assert!(Budget::from_value("x", &serde_json::json!(1.5)).is_err());
        assert!(Budget::from_value("x", &serde_json::json!(-0.5)).is_err());
    }

    #[test]
    fn parse_and_canonical_params() {
        let spec = GeneratorSpec::from_name_params(
            GEN_DFS,
            &map(&[("do_forks", Value::Bool(false)), ("accessible_cells", Value::from(20))]),
        )
        .unwrap();
        assert_eq!(spec.label(), "gen_dfs:accessible_cells=20:do_forks=false");
        assert_eq!(GeneratorSpec::parse_label(&spec.label()).unwrap(), spec);

        let defaults = GeneratorSpec::from_name_params(GEN_DFS, &map(&[("do_forks", Value::Bool(true))])).unwrap();
        assert!(defaults.params().is_empty());

        let perc = GeneratorSpec::parse_label("gen_percolation").unwrap();
        assert_eq!(perc, GeneratorSpec::Percolation(PercolationParams { p: 0.4 }));
        let dp = GeneratorSpec::parse_label("gen_dfs_percolation:p=0.1:start_coord=[1,2]").unwrap();
        assert_eq!(dp.label(), "gen_dfs_percolation:p=0.1:start_coord=[1,2]");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GeneratorSpec::from_name_params("gen_prim", &ParamMap::new()).is_err());
        assert!(GeneratorSpec::from_name_params(GEN_WILSON, &map(&[("p", Value::from(1))])).is_err());
        assert!(GeneratorSpec::from_name_params(GEN_PERCOLATION, &map(&[("p", serde_json::json!(1.5))])).is_err());
        assert!(GeneratorSpec::from_name_params(GEN_DFS, &map(&[("do_forks", Value::from(3))])).is_err());
        assert!(GeneratorSpec::from_name_params(GEN_DFS, &map(&[("start_coord", Value::from(3))])).is_err());
        assert!(parse_kv("novalue").is_err());
    }
}
