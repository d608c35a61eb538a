use std::path::Path;
use std::process::{Command, Output};

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::filters::Filter;
use mazeforge::formats::{to_ascii, to_pixels, CoordScheme, PixelGrid};
use mazeforge::generators::{DfsParams, GeneratorSpec};

fn mazeforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mazeforge"))
        .args(args)
        .env_remove("MAZEFORGE_WORKERS")
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn generate_writes_container_matching_library() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = mazeforge(&[
        "generate",
        "--grid-n",
        "3",
        "--n-mazes",
        "32",
        "--algorithm",
        "gen_dfs",
        "--seed",
        "42",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let ds = MazeDataset::load(&out).unwrap();
    assert_eq!(ds.len(), 32);

    let cfg = MazeDatasetConfig::new("dataset", 3, 32, GeneratorSpec::Dfs(DfsParams::default())).unwrap().with_seed(42);
    let lib = MazeDataset::generate(cfg, 1).unwrap().to_container_string();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), lib);

    let again = dir.path().join("again.json");
    let o = mazeforge(&[
        "generate",
        "--grid-n",
        "3",
        "--n-mazes",
        "32",
        "--algorithm",
        "gen_dfs",
        "--seed",
        "42",
        "--workers",
        "3",
        "--out",
        path_str(&again),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn generate_with_params_and_rectangle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = mazeforge(&[
        "generate",
        "--name",
        "rect",
        "--grid-rows",
        "4",
        "--grid-cols",
        "7",
        "--n-mazes",
        "5",
        "--algorithm",
        "gen_dfs_percolation",
        "--param",
        "p=0.2",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let ds = MazeDataset::load(&out).unwrap();
    assert_eq!((ds.config.shape.rows, ds.config.shape.cols), (4, 7));
    assert_eq!(ds.config.generator.label(), "gen_dfs_percolation:p=0.2");
}

#[test]
fn unknown_algorithm_exits_one() {
    let o = mazeforge(&["generate", "--algorithm", "gen_prim"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown algorithm"), "{}", stderr(&o));
}

#[test]
fn render_ascii_of_two_cell_maze() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("d.json");
    let o = mazeforge(&[
        "generate",
        "--grid-rows",
        "1",
        "--grid-cols",
        "2",
        "--n-mazes",
        "1",
        "--algorithm",
        "gen_dfs",
        "--out",
        path_str(&data),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = mazeforge(&["render", "--in", path_str(&data), "--index", "0", "--format", "ascii"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text == "#####\n#SXE#\n#####\n" || text == "#####\n#EXS#\n#####\n", "{text}");
    let ds = MazeDataset::load(&data).unwrap();
    assert_eq!(text, to_ascii(&ds.mazes[0]).to_string());
}

#[test]
fn render_tokens_and_pixels_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("d.json");
    mazeforge(&[
        "generate",
        "--grid-n",
        "4",
        "--n-mazes",
        "3",
        "--algorithm",
        "gen_wilson",
        "--seed",
        "7",
        "--out",
        path_str(&data),
    ]);
    let ds = MazeDataset::load(&data).unwrap();

    for scheme in [CoordScheme::Single, CoordScheme::Pair] {
        let o = mazeforge(&[
            "render",
            "--in",
            path_str(&data),
            "--index",
            "2",
            "--format",
            "tokens",
            "--scheme",
            scheme.name(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), ds.tokens(2, scheme).unwrap().to_text() + "\n");
    }

    let ppm = dir.path().join("m.ppm");
    let o =
        mazeforge(&["render", "--in", path_str(&data), "--index", "1", "--format", "pixels", "--out", path_str(&ppm)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let read = PixelGrid::read_ppm(std::io::BufReader::new(std::fs::File::open(&ppm).unwrap())).unwrap();
    assert_eq!(read, to_pixels(&ds.mazes[1]));

    let png = dir.path().join("m.png");
    let o = mazeforge(&["render", "--in", path_str(&data), "--format", "pixels", "--out", path_str(&png)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read(&png).unwrap().starts_with(b"\x89PNG"));

    let o = mazeforge(&["render", "--in", path_str(&data), "--format", "pixels"]);
    assert_eq!(o.status.code(), Some(1));
    let o = mazeforge(&["render", "--in", path_str(&data), "--index", "3", "--format", "ascii"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--index"));
}

#[test]
fn filter_appends_record_and_stats_reports_it() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("d.json");
    let filtered = dir.path().join("f.json");
    mazeforge(&[
        "generate",
        "--grid-n",
        "5",
        "--n-mazes",
        "40",
        "--algorithm",
        "gen_dfs",
        "--seed",
        "3",
        "--out",
        path_str(&data),
    ]);
    let o = mazeforge(&[
        "filter",
        "--in",
        path_str(&data),
        "--out",
        path_str(&filtered),
        "--filter",
        "path_length",
        "--arg",
        "min_length=4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let lib = MazeDataset::load(&data).unwrap().filter(Filter::PathLength { min_length: 4 }).unwrap();
    assert_eq!(std::fs::read_to_string(&filtered).unwrap(), lib.to_container_string());

    let o = mazeforge(&["stats", "--in", path_str(&filtered)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("generator: gen_dfs"));
    assert!(text.contains("path_length {\"min_length\":4}"));
    assert!(text.contains("solution length histogram:"));

    let o = mazeforge(&["filter", "--in", path_str(&data), "--out", path_str(&filtered), "--filter", "shortest"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--filter"));
}

#[test]
fn corrupt_container_is_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("d.json");
    mazeforge(&["generate", "--grid-n", "3", "--n-mazes", "2", "--algorithm", "gen_dfs", "--out", path_str(&data)]);
    let text = std::fs::read_to_string(&data).unwrap().replace("\"1.0\"", "\"0.9\"");
    std::fs::write(&data, text).unwrap();
    let o = mazeforge(&["stats", "--in", path_str(&data)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("0.9"));
}

#[test]
fn benchmark_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let o = mazeforge(&[
        "benchmark",
        "--sizes",
        "3,4",
        "--algorithms",
        "gen_dfs,gen_percolation:p=0.5",
        "--n-per-cell",
        "2",
        "--out",
        path_str(&csv),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algorithm,params,grid_n,n_mazes,mean_ms,median_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[3].starts_with("gen_percolation,\"{\"\"p\"\":0.5}\",3,2,"));
}
