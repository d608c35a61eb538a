use std::io::{self, BufRead, Write};

use super::grid::{parse_marks, render_solved, Mark, MarkGrid};
use crate::error::{ParseError, Position};
use crate::lattice::SolvedMaze;

pub type Rgb = [u8; 3];

pub const WALL_RGB: Rgb = [0, 0, 0];
pub const OPEN_RGB: Rgb = [255, 255, 255];
pub const ORIGIN_RGB: Rgb = [0, 255, 0];
pub const TARGET_RGB: Rgb = [255, 0, 0];
pub const PATH_RGB: Rgb = [0, 0, 255];

pub(crate) fn mark_rgb(m: Mark) -> Rgb {
    match m {
        Mark::Wall => WALL_RGB,
        Mark::Open => OPEN_RGB,
        Mark::Origin => ORIGIN_RGB,
        Mark::Target => TARGET_RGB,
        Mark::Path => PATH_RGB,
    }
}

fn rgb_mark(p: Rgb) -> Option<Mark> {
    Some(match p {
        WALL_RGB => Mark::Wall,
        OPEN_RGB => Mark::Open,
        ORIGIN_RGB => Mark::Origin,
        TARGET_RGB => Mark::Target,
        PATH_RGB => Mark::Path,
        _ => return None,
    })
}

/// Row-major RGB image, logically `(height, width, 3)` bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PixelGrid {
    height: usize,
    width: usize,
    data: Vec<Rgb>,
}

/// A maze rendered with the five-colour palette.
pub type PixelMaze = PixelGrid;

impl PixelGrid {
    pub fn new(height: usize, width: usize, fill: Rgb) -> Self {
        PixelGrid { height, width, data: vec![fill; height * width] }
    }

    pub fn from_pixels(height: usize, width: usize, data: Vec<Rgb>) -> Option<Self> {
        (data.len() == height * width).then_some(PixelGrid { height, width, data })
    }

    pub(crate) fn from_marks(grid: &MarkGrid) -> Self {
        let height = grid.len();
        let width = grid.first().map_or(0, Vec::len);
        let data = grid.iter().flatten().map(|&m| mark_rgb(m)).collect();
        PixelGrid { height, width, data }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `(height, width, 3)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.height, self.width, 3)
    }

    pub fn get(&self, row: usize, col: usize) -> Rgb {
        self.data[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, rgb: Rgb) {
        self.data[row * self.width + col] = rgb;
    }

    pub fn pixels(&self) -> &[Rgb] {
        &self.data
    }

    /// Flat `height·width·3` bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.data.iter().flatten().copied().collect()
    }

    /// Binary PPM (P6).
    pub fn write_ppm<W: Write>(&self, mut w: W) -> io::Result<()> {
        write!(w, "P6\n{} {}\n255\n", self.width, self.height)?;
        w.write_all(&self.to_bytes())
    }

    pub fn read_ppm<R: BufRead>(mut r: R) -> io::Result<Self> {
        let bad = |m: &str| io::Error::new(io::ErrorKind::InvalidData, m.to_string());
        let mut header = Vec::new();
        // magic, width, height, maxval; whitespace separated, '#' comments
        while header.len() < 4 {
            let mut line = String::new();
            if r.read_line(&mut line)? == 0 {
                return Err(bad("truncated PPM header"));
            }
            let content = line.split('#').next().unwrap_or_default();
            header.extend(content.split_whitespace().map(str::to_string));
        }
        if header[0] != "P6" || header[3] != "255" {
            return Err(bad("only 8-bit binary PPM (P6) is supported"));
        }
        let width: usize = header[1].parse().map_err(|_| bad("bad PPM width"))?;
        let height: usize = header[2].parse().map_err(|_| bad("bad PPM height"))?;
        let mut bytes = vec![0u8; width * height * 3];
        r.read_exact(&mut bytes)?;
        let data = bytes.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
        Ok(PixelGrid { height, width, data })
    }

    pub fn write_png<W: Write>(&self, w: W) -> io::Result<()> {
        let mut enc = png::Encoder::new(w, self.width as u32, self.height as u32);
        enc.set_color(png::ColorType::Rgb);
        enc.set_depth(png::BitDepth::Eight);
        let mut writer = enc.write_header().map_err(io::Error::other)?;
        writer.write_image_data(&self.to_bytes()).map_err(io::Error::other)?;
        writer.finish().map_err(io::Error::other)
    }
}

pub fn to_pixels(sm: &SolvedMaze) -> PixelMaze {
    PixelGrid::from_marks(&render_solved(sm))
}

pub fn from_pixels(p: &PixelMaze) -> Result<SolvedMaze, ParseError> {
    let mut grid = Vec::with_capacity(p.height);
    for r in 0..p.height {
        let row = (0..p.width)
            .map(|c| {
                let px = p.get(r, c);
                rgb_mark(px)
                    .ok_or_else(|| ParseError::at(Position::Grid { row: r, col: c }, format!("unknown colour {px:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        grid.push(row);
    }
    parse_marks(&grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ConnectionList, Coord, GridShape, LatticeMaze};

    fn sample() -> SolvedMaze {
        let mut c = ConnectionList::new(GridShape::new(2, 3).unwrap());
        c.set(Coord::new(0, 0), Coord::new(0, 1), true).unwrap();
        c.set(Coord::new(0, 1), Coord::new(1, 1), true).unwrap();
        c.set(Coord::new(1, 1), Coord::new(1, 2), true).unwrap();
        SolvedMaze::solve(LatticeMaze::new(c), Coord::new(0, 0), Coord::new(1, 2)).unwrap()
    }

    #[test]
    fn geometry_and_palette() {
        let p = to_pixels(&sample());
        assert_eq!(p.shape(), (5, 7, 3));
        assert_eq!(p.get(0, 0), WALL_RGB);
        assert_eq!(p.get(1, 1), ORIGIN_RGB);
        assert_eq!(p.get(1, 2), PATH_RGB);
        assert_eq!(p.get(3, 5), TARGET_RGB);
        assert_eq!(p.get(3, 1), OPEN_RGB);
        assert_eq!(from_pixels(&p).unwrap(), sample());
    }

    #[test]
    fn unknown_colour_is_an_error() {
        let mut p = to_pixels(&sample());
        p.set(2, 2, [1, 2, 3]);
        let e = from_pixels(&p).unwrap_err();
        assert_eq!(e.position, Position::Grid { row: 2, col: 2 });
    }

    #[test]
    fn ppm_round_trip() {
        let p = to_pixels(&sample());
        let mut buf = Vec::new();
        p.write_ppm(&mut buf).unwrap();
        assert!(buf.starts_with(b"P6\n7 5\n255\n"));
        assert_eq!(PixelGrid::read_ppm(&buf[..]).unwrap(), p);
    }

    #[test]
    fn png_signature() {
        let mut buf = Vec::new();
        to_pixels(&sample()).write_png(&mut buf).unwrap();
        assert_eq!(&buf[..8], b"\x89PNG\r\n\x1a\n");
    }
}
