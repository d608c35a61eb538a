//! Lossless conversions between [`SolvedMaze`](crate::lattice::SolvedMaze) and
//! its text, image and token forms.

mod ascii;
mod grid;
mod pixels;
mod raster;
mod tokens;
pub mod vocab;

pub use ascii::{from_ascii, to_ascii, AsciiMaze};
pub use grid::Mark;
pub use pixels::{
    from_pixels, to_pixels, PixelGrid, PixelMaze, Rgb, OPEN_RGB, ORIGIN_RGB, PATH_RGB, TARGET_RGB, WALL_RGB,
};
pub use raster::{to_raster_pair, RasterOptions};
pub use tokens::{encode_with_adjlist, from_tokens, to_tokens, TokenSequence};
pub use vocab::{shell_coord, shell_rank, CoordScheme, TokenVocab};
