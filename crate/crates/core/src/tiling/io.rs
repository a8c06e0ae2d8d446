//! Plain-text region, tile and certificate files.

use std::fmt::Write;

use super::{Placement, Region, Sign};
use crate::error::{Error, Result};

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_cell(line_no: usize, line: &str) -> Result<(i64, i64)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<i64> {
        let tok = it
            .next()
            .ok_or_else(|| syntax(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| syntax(line_no, format!("bad integer {tok:?}")))
    };
    let cell = (next("i")?, next("j")?);
    if it.next().is_some() {
        return Err(syntax(line_no, "trailing input"));
    }
    Ok(cell)
}

/// One cell per line as `i j`; blank lines and `#` lines are skipped.
pub fn parse_region(text: &str) -> Result<Region> {
    let mut r = Region::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        r.insert(parse_cell(k + 1, line)?);
    }
    Ok(r)
}

pub fn format_region(r: &Region) -> String {
    let mut s = String::new();
    for (i, j) in r.cells() {
        let _ = writeln!(s, "{i} {j}");
    }
    s
}

/// Blocks of region lines separated by blank lines, one block per tile.
pub fn parse_tiles(text: &str) -> Result<Vec<Region>> {
    let mut tiles = Vec::new();
    let mut current = Region::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                tiles.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.insert(parse_cell(k + 1, line)?);
    }
    if !current.is_empty() {
        tiles.push(current);
    }
    if tiles.is_empty() {
        return Err(syntax(0, "no tiles"));
    }
    Ok(tiles)
}

pub fn format_tiles(tiles: &[Region]) -> String {
    tiles
        .iter()
        .map(format_region)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Contents of a certificate file: the tile count, the path of the region
/// file and the placements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateFile {
    pub tiles: usize,
    pub region_path: String,
    pub placements: Vec<Placement>,
}

pub fn format_certificate(tiles: usize, region_path: &str, placements: &[Placement]) -> String {
    let mut s = format!("tiles={tiles} region={region_path}\n");
    for p in placements {
        let _ = writeln!(s, "{} {} {} {}", p.sign, p.tile, p.shift.0, p.shift.1);
    }
    s
}

pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let mut tiles = None;
    let mut region_path = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("tiles", v)) => {
                tiles = Some(v.parse().map_err(|_| syntax(hline, "bad tile count"))?)
            }
            Some(("region", v)) => region_path = Some(v.to_string()),
            _ => return Err(syntax(hline, format!("unknown header field {field:?}"))),
        }
    }
    let tiles: usize = tiles.ok_or_else(|| syntax(hline, "header lacks tiles="))?;
    let region_path = region_path.ok_or_else(|| syntax(hline, "header lacks region="))?;

    let mut placements = Vec::new();
    for (k, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [sign, idx, a, b] = parts[..] else {
            return Err(syntax(k, "expected '<+|-> tile a b'"));
        };
        let sign = match sign {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(syntax(k, format!("bad sign {sign:?}"))),
        };
        let num = |t: &str| -> Result<i64> {
            t.parse()
                .map_err(|_| syntax(k, format!("bad integer {t:?}")))
        };
        let tile = idx
            .parse::<usize>()
            .map_err(|_| syntax(k, format!("bad tile index {idx:?}")))?;
        if tile >= tiles {
            return Err(syntax(k, format!("tile index {tile} out of range")));
        }
        placements.push(Placement {
            tile,
            shift: (num(a)?, num(b)?),
            sign,
        });
    }
    Ok(CertificateFile {
        tiles,
        region_path,
        placements,
    })
}
