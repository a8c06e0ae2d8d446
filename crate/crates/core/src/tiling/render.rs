use std::fmt::Write;
use std::str::FromStr;

use super::{Cell, Certificate, Region, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Renderable<'a> {
    Region(&'a Region),
    Certificate(&'a Certificate),
}

/// Hex side in SVG user units.
const SCALE: f64 = 20.0;
const MARGIN: f64 = 2.0;

pub fn render(item: Renderable<'_>, format: RenderFormat) -> Vec<u8> {
    match format {
        RenderFormat::Text => render_text(item),
        RenderFormat::Svg => render_svg(item),
    }
    .into_bytes()
}

fn row_major(r: &Region) -> Vec<Cell> {
    let mut cells: Vec<Cell> = r.cells().collect();
    cells.sort_by_key(|&(i, j)| (j, i));
    cells
}

fn render_text(item: Renderable<'_>) -> String {
    let mut s = String::new();
    match item {
        Renderable::Region(r) => {
            for (i, j) in row_major(r) {
                let _ = writeln!(s, "{i} {j}");
            }
        }
        Renderable::Certificate(c) => {
            for p in &c.placements {
                let _ = writeln!(s, "{} {} {} {}", p.sign, p.tile, p.shift.0, p.shift.1);
            }
        }
    }
    s
}

fn center((i, j): Cell) -> (f64, f64) {
    let (i, j) = (i as f64, j as f64);
    (SCALE * (i + j / 2.0), SCALE * j * 3f64.sqrt() / 2.0)
}

struct Frame {
    x0: f64,
    y1: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(cells: &[Cell]) -> Option<Frame> {
        let r = SCALE / 3f64.sqrt();
        let mut pts = cells.iter().map(|&c| center(c));
        let first = pts.next()?;
        let (mut x0, mut y0, mut x1, mut y1) = (first.0, first.1, first.0, first.1);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let pad = r + MARGIN;
        Some(Frame {
            x0: x0 - pad,
            y1: y1 + pad,
            width: x1 - x0 + 2.0 * pad,
            height: y1 - y0 + 2.0 * pad,
        })
    }

    /// Pointy-top hexagon around the cell centre, y axis flipped.
    fn hexagon(&self, cell: Cell) -> String {
        let (cx, cy) = center(cell);
        let (cx, cy) = (cx - self.x0, self.y1 - cy);
        let r = SCALE / 3f64.sqrt();
        (0..6)
            .map(|k| {
                let a = std::f64::consts::PI / 180.0 * (90.0 + 60.0 * k as f64);
                format!("{:.2},{:.2}", cx + r * a.cos(), cy - r * a.sin())
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn render_svg(item: Renderable<'_>) -> String {
    let (region, placements): (&Region, &[_]) = match item {
        Renderable::Region(r) => (r, &[]),
        Renderable::Certificate(c) => (&c.region, &c.placements),
    };
    let mut all: Vec<Cell> = region.cells().collect();
    let placed: Vec<(Sign, usize, Vec<Cell>)> = match item {
        Renderable::Region(_) => Vec::new(),
        Renderable::Certificate(c) => placements
            .iter()
            .map(|p| {
                let cells = c
                    .prototiles
                    .get(p.tile)
                    .map(|t| t.translate(p.shift).cells().collect())
                    .unwrap_or_default();
                (p.sign, p.tile, cells)
            })
            .collect(),
    };
    for (_, _, cells) in &placed {
        all.extend(cells);
    }

    let mut s = String::new();
    let Some(frame) = Frame::new(&all) else {
        s.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" viewBox=\"0 0 0 0\"></svg>\n",
        );
        return s;
    };
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">",
        w = frame.width,
        h = frame.height
    );
    s.push_str(
        "<style>.region polygon{fill:#eeeeee;stroke:#555555;stroke-width:1}\
.pos polygon{fill:#4a90d9;fill-opacity:0.35;stroke:#1f5fa0}\
.neg polygon{fill:#d9534a;fill-opacity:0.35;stroke:#a0281f}</style>\n",
    );
    s.push_str("<g class=\"region\">\n");
    for cell in row_major(region) {
        let _ = writeln!(s, "<polygon points=\"{}\"/>", frame.hexagon(cell));
    }
    s.push_str("</g>\n");
    for (sign, tile, cells) in &placed {
        let class = match sign {
            Sign::Plus => "pos",
            Sign::Minus => "neg",
        };
        let _ = writeln!(s, "<g class=\"placement {class}\" data-tile=\"{tile}\">");
        for &cell in cells {
            let _ = writeln!(s, "<polygon points=\"{}\"/>", frame.hexagon(cell));
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}
