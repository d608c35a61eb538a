//! Token sequences under both coordinate schemes, the model prompt, and the
//! vocabulary indices. Small mazes use only the first indices of a larger
//! vocabulary.

use mazeforge::dataset::{MazeDataset, MazeDatasetConfig};
use mazeforge::formats::{from_tokens, shell_rank, CoordScheme, TokenVocab};
use mazeforge::generators::GeneratorSpec;
use mazeforge::Coord;

fn main() -> mazeforge::Result<()> {
    let cfg = MazeDatasetConfig::new("tok", 3, 4, GeneratorSpec::Wilson)?.with_seed(42);
    let ds = MazeDataset::generate(cfg, 1)?;

    for scheme in [CoordScheme::Single, CoordScheme::Pair] {
        let seq = ds.tokens(0, scheme)?;
        println!("{}:\n  {}", scheme.name(), seq.to_text());
        println!("  prompt: {} tokens", seq.prompt().len());
        assert_eq!(from_tokens(&seq)?, ds.mazes[0]);

        let vocab = TokenVocab::new(10, scheme);
        let ids = vocab.encode(&seq.tokens).expect("all tokens in vocabulary");
        println!("  ids: {ids:?}");
        println!("  largest coordinate id {} < {} special + 9 cells", ids.iter().max().unwrap(), vocab.n_special());
    }

    println!("shell order of a 4x4 grid:");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:>2}", shell_rank(Coord::new(i, j)))).collect();
        println!("  {}", row.join(" "));
    }
    Ok(())
}
