//! Command-line front end. Every subcommand is a thin wrapper over library
//! calls, so its output matches the equivalent library output byte for byte.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dataset::{run_benchmark, MazeDataset, MazeDatasetConfig};
use crate::error::{Error, Result};
use crate::filters::{Filter, FilterRecord};
use crate::formats::{to_ascii, to_pixels, CoordScheme};
use crate::generators::{parse_kv, GeneratorSpec, ParamMap, ALGORITHMS};

/// Environment variable overriding the default `generate --workers`.
pub const WORKERS_ENV: &str = "MAZEFORGE_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mazeforge", version, about = "Generate, filter, render and benchmark lattice maze datasets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a dataset and write it as a container file.
    Generate(GenerateArgs),
    /// Apply a filter to a dataset and record it in the filter history.
    Filter(FilterArgs),
    /// Render one maze as ASCII, pixels or tokens.
    Render(RenderArgs),
    /// Print config, filter history and a solution-length histogram.
    Stats(StatsArgs),
    /// Time generation per algorithm and grid size.
    Benchmark(BenchmarkArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("size").required(true).args(["grid_n", "grid_rows"]))]
struct GenerateArgs {
    #[arg(long, default_value = "dataset")]
    name: String,
    /// Side of a square grid.
    #[arg(long, conflicts_with_all = ["grid_rows", "grid_cols"])]
    grid_n: Option<usize>,
    #[arg(long, requires = "grid_cols")]
    grid_rows: Option<usize>,
    #[arg(long, requires = "grid_rows")]
    grid_cols: Option<usize>,
    #[arg(long)]
    n_mazes: usize,
    #[arg(long, value_parser = parse_algorithm)]
    algorithm: String,
    /// Generator parameter as key=value; repeatable.
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: $MAZEFORGE_WORKERS, else all cores).
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct FilterArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    filter: String,
    /// Filter argument as key=value; repeatable.
    #[arg(long = "arg", value_name = "K=V")]
    args: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Pixels,
    Tokens,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long, value_enum)]
    format: RenderFormat,
    #[arg(long, default_value = "coord-single", value_parser = parse_scheme)]
    scheme: CoordScheme,
    /// Output file; required for pixels (.ppm or .png).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct BenchmarkArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [5usize, 16, 40])]
    sizes: Vec<usize>,
    /// Generator labels such as `gen_dfs` or `gen_percolation:p=0.3`.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    algorithms: Vec<String>,
    #[arg(long, default_value_t = 20)]
    n_per_cell: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_algorithm(s: &str) -> std::result::Result<String, String> {
    if ALGORITHMS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown algorithm `{s}` (expected one of: {})", ALGORITHMS.join(", ")))
    }
}

fn parse_scheme(s: &str) -> std::result::Result<CoordScheme, String> {
    CoordScheme::from_name(s).ok_or_else(|| format!("unknown scheme `{s}` (expected coord-single or coord-pair)"))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

/// Runs the CLI on `argv` (program name first) and returns the exit code:
/// 0 on success, 1 on usage errors, 2 on data errors.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Generate(a) => generate(a),
        Command::Filter(a) => filter(a),
        Command::Render(a) => render(a, out),
        Command::Stats(a) => stats(a, out),
        Command::Benchmark(a) => benchmark(a, out),
    }
}

fn kv_map(items: &[String], flag: &str) -> Result<ParamMap> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = parse_kv(item).map_err(|e| Error::invalid(format!("--{flag} {item}: {e}")))?;
        if map.insert(k.clone(), v).is_some() {
            return Err(Error::invalid(format!("--{flag}: `{k}` given twice")));
        }
    }
    Ok(map)
}

fn default_workers() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::invalid(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn generate(a: GenerateArgs) -> Result<()> {
    let params = kv_map(&a.params, "param")?;
    let spec =
        GeneratorSpec::from_name_params(&a.algorithm, &params).map_err(|e| Error::invalid(format!("--param: {e}")))?;
    let (rows, cols) = match (a.grid_n, a.grid_rows, a.grid_cols) {
        (Some(n), _, _) => (n, n),
        (None, Some(r), Some(c)) => (r, c),
        _ => return Err(Error::invalid("give --grid-n or both --grid-rows and --grid-cols")),
    };
    let cfg = MazeDatasetConfig::new(a.name, rows, a.n_mazes, spec)
        .and_then(|c| c.with_shape(rows, cols))
        .map(|c| c.with_seed(a.seed))?;
    let workers = match a.workers {
        Some(0) => return Err(Error::invalid("--workers must be at least 1")),
        Some(n) => n,
        None => default_workers()?,
    };
    MazeDataset::generate(cfg, workers)?.save(&a.out)
}

fn filter(a: FilterArgs) -> Result<()> {
    let rec = FilterRecord { name: a.filter, params: kv_map(&a.args, "arg")? };
    let f = Filter::from_record(&rec).map_err(|e| Error::invalid(format!("--filter: {e}")))?;
    MazeDataset::load(&a.input)?.filter(f)?.save(&a.out)
}

fn write_text(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(a: RenderArgs, stdout: &mut dyn Write) -> Result<()> {
    let ds = MazeDataset::load(&a.input)?;
    let maze = ds.get(a.index).map_err(|e| Error::invalid(format!("--index: {e}")))?;
    match a.format {
        RenderFormat::Ascii => write_text(&to_ascii(maze).to_string(), a.out.as_deref(), stdout),
        RenderFormat::Tokens => {
            let text = ds.tokens(a.index, a.scheme)?.to_text() + "\n";
            write_text(&text, a.out.as_deref(), stdout)
        }
        RenderFormat::Pixels => {
            let path = a.out.ok_or_else(|| Error::invalid("--out is required for --format pixels"))?;
            let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
            let pixels = to_pixels(maze);
            let mut w = BufWriter::new(match ext.as_deref() {
                Some("ppm") | Some("png") => File::create(&path)?,
                _ => return Err(Error::invalid("--out must end in .ppm or .png")),
            });
            if ext.as_deref() == Some("png") {
                pixels.write_png(&mut w)?;
            } else {
                pixels.write_ppm(&mut w)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn stats(a: StatsArgs, out: &mut dyn Write) -> Result<()> {
    let ds = MazeDataset::load(&a.input)?;
    let cfg = &ds.config;
    writeln!(out, "name: {}", cfg.name)?;
    writeln!(out, "grid: {}x{}", cfg.shape.rows, cfg.shape.cols)?;
    writeln!(out, "generator: {}", cfg.generator.label())?;
    writeln!(out, "seed: {}", cfg.seed)?;
    writeln!(out, "n_mazes: {} (config {})", ds.len(), cfg.n_mazes)?;
    writeln!(out, "filters:")?;
    if ds.applied_filters.is_empty() {
        writeln!(out, "  (none)")?;
    }
    for rec in &ds.applied_filters {
        let params = serde_json::to_string(&rec.params).expect("params serialize");
        writeln!(out, "  {} {params}", rec.name)?;
    }
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for m in &ds.mazes {
        *hist.entry(m.solution().len()).or_default() += 1;
    }
    writeln!(out, "solution length histogram:")?;
    let widest = hist.values().copied().max().unwrap_or(0);
    for (len, count) in hist {
        let bar = "#".repeat((count * 40).div_ceil(widest.max(1)));
        writeln!(out, "  {len:>4} {count:>6} {bar}")?;
    }
    Ok(())
}

fn benchmark(a: BenchmarkArgs, stdout: &mut dyn Write) -> Result<()> {
    let specs = if a.algorithms.is_empty() {
        vec![
            GeneratorSpec::parse_label("gen_dfs")?,
            GeneratorSpec::parse_label("gen_wilson")?,
            GeneratorSpec::parse_label("gen_percolation")?,
            GeneratorSpec::parse_label("gen_dfs_percolation")?,
        ]
    } else {
        a.algorithms
            .iter()
            .map(|l| GeneratorSpec::parse_label(l).map_err(|e| Error::invalid(format!("--algorithms {l}: {e}"))))
            .collect::<Result<_>>()?
    };
    if a.sizes.is_empty() || a.sizes.contains(&0) {
        return Err(Error::invalid("--sizes must list positive grid sizes"));
    }
    let table = run_benchmark(&a.sizes, &specs, a.n_per_cell, a.seed)?;
    match a.out {
        Some(p) => table.write_csv(BufWriter::new(File::create(p)?)),
        None => table.write_csv(stdout),
    }
}
