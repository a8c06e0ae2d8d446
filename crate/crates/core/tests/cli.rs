use std::fs;
use std::path::Path;
use std::process::Command;

use tilegb::cli::run;
use tilegb::tiling::{format_region, format_tiles, nbone_prototiles, triangle_region};

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

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(
        call(&["decide", "--n", "3", "--m", "8"]),
        (0, "YES\n".into(), String::new())
    );
    assert_eq!(call(&["decide", "--n", "3", "--m", "9"]).1, "YES\n");
    assert_eq!(call(&["decide", "--n", "3", "--m", "10"]).0, 1);
    assert_eq!(call(&["homology", "--n", "3"]).1, "Z^2 + Z/3\n");
    assert_eq!(call(&["homology", "--n", "4"]).1, "Z^6 + Z/4\n");
    assert_eq!(
        call(&["reduce", "--n", "3", "--poly", "1 + x + y + x^2 + x*y + y^2 + x^3 + x^2*y + x*y^2 + y^3 + x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4 + x^5 + x^4*y + x^3*y^2 + x^2*y^3 + x*y^4 + y^5"]).1,
        "2 + 2*x + 2*y\n"
    );
}

#[test]
fn gb_text_and_reduce_with_basis_file() {
    let dir = tempfile::tempdir().unwrap();
    let basis = dir.path().join("gbi3");
    let (code, out, _) = call(&["gb", "--n", "3", "--verify", "--out", s(&basis)]);
    assert_eq!((code, out.as_str()), (0, "verify: PASS\n"));
    assert_eq!(
        fs::read_to_string(&basis).unwrap(),
        "order=lex vars=x,y conv=nonneg\n1 + x + x^2\n1 + y + y^2\n3 + 3*x + 3*y\n-2 - x - y + x*y\n"
    );
    let t6 = dir.path().join("T6");
    fs::write(
        &t6,
        tilegb::polyring::format_poly(&tilegb::bones::triangle(6)),
    )
    .unwrap();
    let poly = format!("@{}", s(&t6));
    let (code, out, _) = call(&[
        "reduce",
        "--basis",
        s(&basis),
        "--poly",
        &poly,
        "--conv",
        "minabs",
    ]);
    assert_eq!((code, out.as_str()), (0, "-1 - x - y\n"));
}

#[test]
fn gb_from_tiles() {
    let dir = tempfile::tempdir().unwrap();
    let tiles = dir.path().join("bones.tiles");
    fs::write(&tiles, format_tiles(&nbone_prototiles(3))).unwrap();
    let (code, out, _) = call(&["gb", "--tiles", s(&tiles), "--verify"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("order=lex vars=x,y conv=nonneg\n"));
    assert!(out.ends_with("verify: PASS\n"));
}

#[test]
fn certificate_files_verify_across_grid() {
    let dir = tempfile::tempdir().unwrap();
    for n in 2..=4u32 {
        for m in 1..=2 * n * n {
            let r = u64::from(m) % u64::from(n * n);
            let admissible = r == 0 || r == u64::from(n * n - 1);
            let path = dir.path().join(format!("t{m}_{n}.cert"));
            let (code, _, _) = call(&[
                "certificate",
                "--n",
                &n.to_string(),
                "--m",
                &m.to_string(),
                "--out",
                s(&path),
            ]);
            if !admissible {
                assert_eq!(code, 1, "m={m} n={n}");
                continue;
            }
            assert_eq!(code, 0);
            let (code, out, err) = call(&["verify", "--certificate", s(&path)]);
            assert_eq!((code, out.as_str()), (0, "VALID\n"), "m={m} n={n}: {err}");
        }
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t8.cert");
    assert_eq!(
        call(&["certificate", "--n", "3", "--m", "8", "--out", s(&path)]).0,
        0
    );
    let text = fs::read_to_string(&path).unwrap();
    let flipped = text.replacen("\n+ ", "\n- ", 1);
    assert_ne!(text, flipped);
    fs::write(&path, flipped).unwrap();
    assert_eq!(
        call(&["verify", "--certificate", s(&path)]),
        (1, "INVALID\n".into(), String::new())
    );
}

#[test]
fn render_region_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let region = dir.path().join("t2.region");
    fs::write(&region, format_region(&triangle_region(2))).unwrap();
    let (code, out, _) = call(&[
        "render",
        "--region",
        s(&region),
        "--format",
        "text",
        "--out",
        "-",
    ]);
    assert_eq!((code, out.as_str()), (0, "0 0\n1 0\n0 1\n"));

    let cert = dir.path().join("t8.cert");
    let svg = dir.path().join("t8.svg");
    call(&[
        "certificate",
        "--n",
        "3",
        "--m",
        "8",
        "--out",
        s(&cert),
        "--svg",
        s(&svg),
    ]);
    let from_cert = dir.path().join("again.svg");
    let (code, _, err) = call(&[
        "render",
        "--certificate",
        s(&cert),
        "--format",
        "svg",
        "--out",
        s(&from_cert),
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(fs::read(&svg).unwrap(), fs::read(&from_cert).unwrap());
    assert_eq!(
        call(&[
            "render",
            "--region",
            s(&region),
            "--format",
            "png",
            "--out",
            "-"
        ])
        .0,
        2
    );
}

#[test]
fn decide_and_oracle_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let tiles = dir.path().join("dominoes.tiles");
    fs::write(&tiles, format_tiles(&nbone_prototiles(2))).unwrap();
    for (m, want, code) in [(3, "YES", 0), (2, "NO", 1)] {
        let region = dir.path().join(format!("t{m}.region"));
        fs::write(&region, format_region(&triangle_region(m))).unwrap();
        let out = call(&["decide", "--region", s(&region), "--tiles", s(&tiles)]);
        assert_eq!((out.0, out.1.trim()), (code, want));
        let (ocode, oout, _) = call(&["oracle", "--region", s(&region), "--tiles", s(&tiles)]);
        assert_eq!(ocode, code);
        let first = oout.lines().next().unwrap();
        assert_eq!(
            first,
            if code == 0 {
                "YES"
            } else {
                "NO_SOLUTION_IN_BOX"
            }
        );
    }
    let missing = dir.path().join("absent.region");
    assert_eq!(
        call(&["decide", "--region", s(&missing), "--tiles", s(&tiles)]).0,
        2
    );
}

#[test]
fn brion_output() {
    assert_eq!(
        call(&["brion", "--m", "1"]),
        (
            0,
            "numerator = x - y - x^2 + y^2 + x^2*y - x*y^2\nidentity: OK\n".into(),
            String::new()
        )
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tilegb");
    let out = Command::new(bin)
        .args(["decide", "--n", "3", "--m", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"YES\n");
    let out = Command::new(bin)
        .args(["decide", "--n", "3", "--m", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .args(["decide", "--bogus"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
