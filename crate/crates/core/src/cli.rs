//! Command-line front end. [`run`] takes the argument list and the output
//! streams so it can be driven from tests; the `tilegb` binary is a thin
//! wrapper around it.
//!
//! Exit codes: 0 success, 1 a negative or failed answer, 2 bad usage or
//! unreadable input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::bones::{bone_system_with, decide_nbone};
use crate::brion::{brion_numerator, verify_brion};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, reduce, GroebnerBasis};
use crate::homology::{box_group, stabilized_group};
use crate::oracle::{oracle_decide, OracleDecision};
use crate::polyring::{format_poly, parse_poly, CoeffConvention, Polynomial, TermOrder};
use crate::tiling::{
    certificate_nbone, decide_signed_tiling, format_certificate, format_region, format_tiles,
    nbone_prototiles, newton_polynomial, normalize_region, parse_certificate, parse_region,
    parse_tiles, render, verify_certificate, Certificate, Region, RenderFormat, Renderable,
    TilingDecision, DEFAULT_MAX_ROUNDS,
};

#[derive(Parser, Debug)]
#[command(
    name = "tilegb",
    version,
    about = "Signed tilings and strong Groebner bases over Z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a region has a signed tiling
    Decide(DecideArgs),
    /// Reduce a polynomial by a strong Groebner basis
    Reduce(ReduceArgs),
    /// Print a strong Groebner basis
    Gb(GbArgs),
    /// Write a signed tiling of a triangle by n-bones
    Certificate(CertificateArgs),
    /// Tile homology group
    Homology(HomologyArgs),
    /// Brute-force signed tiling search on a bounded box
    Oracle(OracleArgs),
    /// Check the rational form of a triangle's transform
    Brion(BrionArgs),
    /// Draw a region or certificate
    Render(RenderArgs),
    /// Check a certificate file
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct DecideArgs {
    #[arg(long, requires = "m", conflicts_with_all = ["region", "tiles"])]
    n: Option<u32>,
    #[arg(long, requires = "n")]
    m: Option<u64>,
    #[arg(long, requires = "tiles")]
    region: Option<PathBuf>,
    #[arg(long, requires = "region")]
    tiles: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
    max_rounds: u32,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long, conflicts_with = "basis", required_unless_present = "basis")]
    n: Option<u32>,
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Inline expression, or @PATH to read it from a file
    #[arg(long)]
    poly: String,
    #[arg(long)]
    conv: Option<CoeffConvention>,
    #[arg(long)]
    show_quotients: bool,
}

#[derive(Args, Debug)]
struct GbArgs {
    #[arg(long, conflicts_with = "tiles", required_unless_present = "tiles")]
    n: Option<u32>,
    #[arg(long)]
    tiles: Option<PathBuf>,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CertificateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[arg(long, conflicts_with = "tiles", required_unless_present = "tiles")]
    n: Option<u32>,
    #[arg(long)]
    tiles: Option<PathBuf>,
    /// Use this single box size instead of searching for stabilization
    #[arg(long = "box")]
    box_size: Option<u32>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    region: PathBuf,
    #[arg(long)]
    tiles: PathBuf,
    /// Defaults to twice the largest prototile extent
    #[arg(long)]
    margin: Option<u32>,
}

#[derive(Args, Debug)]
struct BrionArgs {
    #[arg(long)]
    m: u32,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(
        long,
        conflicts_with = "certificate",
        required_unless_present = "certificate"
    )]
    region: Option<PathBuf>,
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Tiles file for a certificate; defaults to `<certificate>.tiles`
    #[arg(long)]
    tiles: Option<PathBuf>,
    #[arg(long)]
    format: RenderFormat,
    /// Output path, `-` for stdout
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    certificate: PathBuf,
    /// Defaults to `<certificate>.tiles`
    #[arg(long)]
    tiles: Option<PathBuf>,
    /// Overrides the region path named in the certificate header
    #[arg(long)]
    region: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let mut ctx = Ctx { out, err };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            2
        }
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn write(path: &Path, data: &[u8]) -> Result<()> {
    fs::write(path, data).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn poly_arg(spec: &str) -> Result<Polynomial> {
    match spec.strip_prefix('@') {
        Some(path) => parse_poly(read(Path::new(path))?.trim()),
        None => parse_poly(spec),
    }
}

fn tile_polys(tiles: &[Region]) -> Result<Vec<Polynomial>> {
    tiles
        .iter()
        .map(|t| newton_polynomial(&normalize_region(t).0))
        .collect()
}

fn max_extent(tiles: &[Region]) -> u32 {
    tiles
        .iter()
        .filter_map(Region::bounding_box)
        .map(|((x0, y0), (x1, y1))| (x1 - x0).max(y1 - y0) + 1)
        .max()
        .unwrap_or(1) as u32
}

/// Reads a certificate file together with its tiles and region.
///
/// The region path in the header is taken relative to the certificate's
/// directory.
fn load_certificate(
    path: &Path,
    tiles: Option<&Path>,
    region: Option<&Path>,
) -> Result<Certificate> {
    let file = parse_certificate(&read(path)?)?;
    let tiles_path = tiles.map_or_else(|| with_suffix(path, ".tiles"), Path::to_path_buf);
    let prototiles = parse_tiles(&read(&tiles_path)?)?;
    if prototiles.len() != file.tiles {
        return Err(Error::InvalidArgument(format!(
            "certificate names {} tiles but {} has {}",
            file.tiles,
            tiles_path.display(),
            prototiles.len()
        )));
    }
    let region_path = match region {
        Some(r) => r.to_path_buf(),
        None => {
            let named = Path::new(&file.region_path);
            match path.parent() {
                Some(dir) if named.is_relative() => dir.join(named),
                _ => named.to_path_buf(),
            }
        }
    };
    Ok(Certificate {
        prototiles,
        placements: file.placements,
        region: parse_region(&read(&region_path)?)?,
    })
}

impl Ctx<'_> {
    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}").map_err(io)
    }

    fn dispatch(&mut self, cmd: Command) -> Result<i32> {
        match cmd {
            Command::Decide(a) => self.decide(a),
            Command::Reduce(a) => self.reduce(a),
            Command::Gb(a) => self.gb(a),
            Command::Certificate(a) => self.certificate(a),
            Command::Homology(a) => self.homology(a),
            Command::Oracle(a) => self.oracle(a),
            Command::Brion(a) => self.brion(a),
            Command::Render(a) => self.render(a),
            Command::Verify(a) => self.verify(a),
        }
    }

    fn decide(&mut self, a: DecideArgs) -> Result<i32> {
        let answer = match (a.n, a.m, a.region, a.tiles) {
            (Some(n), Some(m), None, None) => {
                if decide_nbone(m, n)? {
                    "YES"
                } else {
                    "NO"
                }
            }
            (None, None, Some(region), Some(tiles)) => {
                let region = parse_region(&read(&region)?)?;
                let tiles = parse_tiles(&read(&tiles)?)?;
                match decide_signed_tiling(&region, &tiles, a.max_rounds)? {
                    TilingDecision::Yes(_) => "YES",
                    TilingDecision::No => "NO",
                    TilingDecision::Inconclusive => "INCONCLUSIVE",
                }
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "decide needs either --n and --m or --region and --tiles".into(),
                ))
            }
        };
        self.line(answer)?;
        Ok(if answer == "YES" { 0 } else { 1 })
    }

    fn reduce(&mut self, a: ReduceArgs) -> Result<i32> {
        let basis = match (a.n, &a.basis) {
            (Some(n), _) => bone_system_with(n, a.conv.unwrap_or_default())?.into_gbi(),
            (None, Some(path)) => {
                let b = GroebnerBasis::from_text(&read(path)?)?;
                match a.conv {
                    Some(c) => b.with_convention(c),
                    None => b,
                }
            }
            (None, None) => unreachable!("clap requires --n or --basis"),
        };
        let f = poly_arg(&a.poly)?;
        let red = reduce(&f, &basis)?;
        if a.show_quotients {
            for (k, q) in red.quotients.iter().enumerate() {
                self.line(&format!("q{} = {}", k + 1, format_poly(q)))?;
            }
            self.line(&format!("r = {}", format_poly(&red.remainder)))?;
        } else {
            self.line(&format_poly(&red.remainder))?;
        }
        Ok(0)
    }

    fn gb(&mut self, a: GbArgs) -> Result<i32> {
        let mut basis = match (a.n, &a.tiles) {
            (Some(n), _) => bone_system_with(n, CoeffConvention::NonNeg)?.into_gbi(),
            (None, Some(path)) => {
                let tiles = parse_tiles(&read(path)?)?;
                buchberger(
                    &tile_polys(&tiles)?,
                    &TermOrder::lex(),
                    CoeffConvention::NonNeg,
                    false,
                )?
            }
            (None, None) => unreachable!("clap requires --n or --tiles"),
        };
        let text = basis.to_text();
        match &a.out {
            Some(path) => write(path, text.as_bytes())?,
            None => self.out.write_all(text.as_bytes()).map_err(io)?,
        }
        if a.verify {
            let report = basis.verify();
            if report.is_pass() {
                self.line("verify: PASS")?;
            } else {
                self.line(&format!("verify: FAIL {report:?}"))?;
                return Ok(1);
            }
        }
        Ok(0)
    }

    fn certificate(&mut self, a: CertificateArgs) -> Result<i32> {
        if !decide_nbone(u64::from(a.m), a.n)? {
            writeln!(self.err, "T({}) has no signed tiling by {}-bones", a.m, a.n).map_err(io)?;
            self.line("NO")?;
            return Ok(1);
        }
        let cert = certificate_nbone(a.m, a.n)?;
        let k = cert.prototiles.len();
        match &a.out {
            Some(path) => {
                let region_path = with_suffix(path, ".region");
                let region_name = region_path
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                write(&region_path, format_region(&cert.region).as_bytes())?;
                write(
                    &with_suffix(path, ".tiles"),
                    format_tiles(&cert.prototiles).as_bytes(),
                )?;
                write(
                    path,
                    format_certificate(k, &region_name, &cert.placements).as_bytes(),
                )?;
                self.line(&format!("placements={}", cert.placements.len()))?;
            }
            None => {
                let text = format_certificate(k, "-", &cert.placements);
                self.out.write_all(text.as_bytes()).map_err(io)?;
            }
        }
        if let Some(svg) = &a.svg {
            write(
                svg,
                &render(Renderable::Certificate(&cert), RenderFormat::Svg),
            )?;
        }
        Ok(0)
    }

    fn homology(&mut self, a: HomologyArgs) -> Result<i32> {
        let tiles = match (a.n, &a.tiles) {
            (Some(n), _) => {
                if n < 2 {
                    return Err(Error::InvalidArgument(format!(
                        "bone length must be >= 2, got {n}"
                    )));
                }
                nbone_prototiles(n)
            }
            (None, Some(path)) => parse_tiles(&read(path)?)?,
            (None, None) => unreachable!("clap requires --n or --tiles"),
        };
        if let Some(size) = a.box_size {
            let g = box_group(&tiles, size)?;
            self.line(&g.to_string())?;
            return Ok(0);
        }
        let start = 3 * max_extent(&tiles);
        let (g, stable) = stabilized_group(&tiles, start, start + 5)?;
        self.line(&g.to_string())?;
        if stable {
            Ok(0)
        } else {
            writeln!(
                self.err,
                "box groups did not stabilize up to size {}",
                start + 5
            )
            .map_err(io)?;
            Ok(1)
        }
    }

    fn oracle(&mut self, a: OracleArgs) -> Result<i32> {
        let region = parse_region(&read(&a.region)?)?;
        let tiles = parse_tiles(&read(&a.tiles)?)?;
        let margin = a.margin.unwrap_or_else(|| 2 * max_extent(&tiles));
        match oracle_decide(&region, &tiles, margin)? {
            OracleDecision::Yes { certificate, .. } => {
                self.line("YES")?;
                self.line(&format!("placements={}", certificate.placements.len()))?;
                Ok(0)
            }
            OracleDecision::NoSolutionInBox => {
                self.line("NO_SOLUTION_IN_BOX")?;
                Ok(1)
            }
        }
    }

    fn brion(&mut self, a: BrionArgs) -> Result<i32> {
        self.line(&format!(
            "numerator = {}",
            format_poly(&brion_numerator(a.m))
        ))?;
        if verify_brion(a.m) {
            self.line("identity: OK")?;
            Ok(0)
        } else {
            self.line("identity: FAIL")?;
            Ok(1)
        }
    }

    fn render(&mut self, a: RenderArgs) -> Result<i32> {
        let bytes = match (&a.region, &a.certificate) {
            (Some(path), _) => {
                let region = parse_region(&read(path)?)?;
                render(Renderable::Region(&region), a.format)
            }
            (None, Some(path)) => {
                let cert = load_certificate(path, a.tiles.as_deref(), None)?;
                render(Renderable::Certificate(&cert), a.format)
            }
            (None, None) => unreachable!("clap requires --region or --certificate"),
        };
        if a.out.as_os_str() == "-" {
            self.out.write_all(&bytes).map_err(io)?;
        } else {
            write(&a.out, &bytes)?;
        }
        Ok(0)
    }

    fn verify(&mut self, a: VerifyArgs) -> Result<i32> {
        let cert = load_certificate(&a.certificate, a.tiles.as_deref(), a.region.as_deref())?;
        if verify_certificate(&cert) {
            self.line("VALID")?;
            Ok(0)
        } else {
            self.line("INVALID")?;
            Ok(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tilegb").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn decide_codes() {
        assert_eq!(call(&["decide", "--n", "3", "--m", "8"]).0, 0);
        assert_eq!(
            call(&["decide", "--n", "3", "--m", "7"]),
            (1, "NO\n".into(), String::new())
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["decide", "--n", "3"]).0, 2);
        assert_eq!(call(&["reduce", "--n", "3", "--poly", "1 +"]).0, 2);
        assert_eq!(call(&["decide", "--n", "1", "--m", "3"]).0, 2);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("decide"));
    }

    #[test]
    fn inline_reduce() {
        let (code, out, _) = call(&["reduce", "--n", "3", "--poly", "x^3"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
        let (_, out, _) = call(&["reduce", "--n", "2", "--poly", "x", "--show-quotients"]);
        assert_eq!(out, "q1 = 1\nq2 = 0\nq3 = -1\nq4 = 0\nr = 1\n");
    }

    #[test]
    fn brion_and_homology() {
        let (code, out, _) = call(&["brion", "--m", "1"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("identity: OK\n"));
        assert_eq!(call(&["homology", "--n", "2"]).1, "Z/2\n");
        assert_eq!(
            call(&["homology", "--n", "3", "--box", "9"]).1,
            "Z^2 + Z/3\n"
        );
    }
}
