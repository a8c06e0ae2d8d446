//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its runtime; the process fails if any criterion fails.
//!
//! Expected values come from brute-force constructions written here, not
//! from the library's own closed forms.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use tilegb::bones::{b3_remainder, bone_system_with, gbi_elements, t_remainder_closed};
use tilegb::brion::verify_brion;
use tilegb::cli::run;
use tilegb::groebner::{
    buchberger, ideal_member, reduce, s_polynomial, verify_strong_gb, GroebnerBasis,
};
use tilegb::homology::box_group;
use tilegb::oracle::{oracle_decide, OracleDecision};
use tilegb::polyring::{format_poly, parse_poly, CoeffConvention, Polynomial, TermOrder};
use tilegb::tiling::{certificate_nbone, verify_certificate, Region};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Independent constructions.

/// `sum x^i y^j` over `i + j <= m - 1`, cell by cell.
fn tri(m: u32) -> Polynomial {
    let mut terms = Vec::new();
    for i in 0..m {
        for j in 0..m - i {
            terms.push((1, i, j));
        }
    }
    Polynomial::from_xy(terms)
}

/// `sum_{i+j = k-1} x^i y^j`.
fn b3(k: u32) -> Polynomial {
    Polynomial::from_xy((0..k).map(|i| (1, i, k - 1 - i)))
}

fn tri_cells(m: i64) -> Region {
    (0..m)
        .flat_map(|i| (0..m - i).map(move |j| (i, j)))
        .collect()
}

fn bone_cells(n: i64) -> Vec<Region> {
    vec![
        (0..n).map(|i| (i, 0)).collect(),
        (0..n).map(|i| (0, i)).collect(),
        (0..n).map(|i| (n - 1 - i, i)).collect(),
    ]
}

fn admissible(m: u64, n: u64) -> bool {
    let r = m % (n * n);
    r == 0 || r == n * n - 1
}

fn gbi(n: u32, conv: CoeffConvention) -> GroebnerBasis {
    bone_system_with(n, conv).unwrap().into_gbi()
}

fn c1() -> Check {
    for n in 2..=12u32 {
        for conv in [CoeffConvention::NonNeg, CoeffConvention::MinAbs] {
            let b = GroebnerBasis::new(gbi_elements(n).unwrap().to_vec(), TermOrder::lex(), conv)
                .unwrap();
            let report = verify_strong_gb(&b);
            ensure(report.is_pass(), || format!("n={n} {conv}: {report:?}"))?;
        }
    }
    Ok("explicit basis strong for n=2..12, both conventions".into())
}

fn c2() -> Check {
    let t6 = tri(6);
    let minabs = reduce(&t6, &gbi(3, CoeffConvention::MinAbs))
        .unwrap()
        .remainder;
    ensure(minabs == parse_poly("-1 - x - y").unwrap(), || {
        format!("minabs remainder {}", format_poly(&minabs))
    })?;
    let nonneg = reduce(&t6, &gbi(3, CoeffConvention::NonNeg))
        .unwrap()
        .remainder;
    let expected = (1..=6).fold(Polynomial::zero(2), |acc, k| acc + b3(k % 3));
    ensure(nonneg == expected, || {
        format!(
            "nonneg remainder {} vs sum {}",
            format_poly(&nonneg),
            format_poly(&expected)
        )
    })?;
    ensure(format_poly(&expected) == "2 + 2*x + 2*y", || {
        format_poly(&expected)
    })?;
    Ok(format!(
        "minabs {}, nonneg {}",
        format_poly(&minabs),
        format_poly(&nonneg)
    ))
}

fn c3() -> Check {
    let mut checked = 0;
    for n in 2..=6u32 {
        let b = gbi(n, CoeffConvention::NonNeg);
        for m in 1..=2 * n * n + 2 {
            let member = ideal_member(&tri(m), &b).unwrap().is_some();
            ensure(member == admissible(u64::from(m), u64::from(n)), || {
                format!("n={n} m={m}: member={member}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, m) pairs, 0 mismatches"))
}

fn c4() -> Check {
    for n in 2..=8u32 {
        let b = gbi(n, CoeffConvention::NonNeg);
        let nn = n * n;
        let rems: Vec<Polynomial> = (0..=3 * nn)
            .map(|m| reduce(&tri(m), &b).unwrap().remainder)
            .collect();
        for (m, r) in rems.iter().enumerate() {
            let closed = t_remainder_closed(m as u64, n).unwrap();
            ensure(&closed == r, || format!("n={n} m={m}: closed form differs"))?;
            if m + (nn as usize) < rems.len() {
                ensure(rems[m + nn as usize] == *r, || {
                    format!("n={n} m={m}: not periodic")
                })?;
            }
        }
    }
    Ok("n=2..8, m=0..3n^2".into())
}

fn c5() -> Check {
    for n in 2..=8u32 {
        let b = gbi(n, CoeffConvention::NonNeg);
        for m in 0..=3 * n * n {
            let direct = reduce(&b3(m), &b).unwrap().remainder;
            ensure(direct == b3_remainder(u64::from(m), n).unwrap(), || {
                format!("n={n} m={m}")
            })?;
            ensure(direct == b3(m % n), || {
                format!("n={n} m={m}: not b3(m mod n)")
            })?;
        }
    }
    Ok("n=2..8, m=0..3n^2".into())
}

fn zero_reducing(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a.elements()
        .iter()
        .all(|e| reduce(e, b).unwrap().remainder.is_zero())
}

fn c6() -> Check {
    let mut out = Vec::new();
    for n in 3..=5u32 {
        let start = Instant::now();
        let gens = vec![
            Polynomial::from_xy((0..n).map(|i| (1, i, 0))),
            Polynomial::from_xy((0..n).map(|i| (1, 0, i))),
            b3(n),
        ];
        let completed = buchberger(&gens, &TermOrder::lex(), CoeffConvention::NonNeg, false)
            .map_err(|e| e.to_string())?;
        let reference = gbi(n, CoeffConvention::NonNeg);
        ensure(verify_strong_gb(&completed).is_pass(), || {
            format!("n={n}: not strong")
        })?;
        ensure(zero_reducing(&completed, &reference), || {
            format!("n={n}: completed not in I")
        })?;
        ensure(zero_reducing(&reference, &completed), || {
            format!("n={n}: explicit basis not reduced")
        })?;
        let dt = start.elapsed();
        ensure(dt < Duration::from_secs(60), || {
            format!("n={n} took {dt:?}")
        })?;
        out.push(format!("n={n} {} elements", completed.len()));
    }
    Ok(out.join(", "))
}

fn c7() -> Check {
    let mut count = 0;
    let mut fig1 = false;
    for n in 2..=4u32 {
        for m in 1..=2 * n * n {
            if !admissible(u64::from(m), u64::from(n)) {
                continue;
            }
            let c = certificate_nbone(m, n).map_err(|e| e.to_string())?;
            ensure(c.region == tri_cells(i64::from(m)), || {
                format!("({m},{n}) wrong region")
            })?;
            ensure(c.prototiles == bone_cells(i64::from(n)), || {
                format!("({m},{n}) wrong tiles")
            })?;
            ensure(verify_certificate(&c), || {
                format!("({m},{n}) does not verify")
            })?;
            fig1 |= (m, n) == (8, 3);
            count += 1;
        }
    }
    ensure(fig1, || "(8,3) missing".into())?;
    Ok(format!("{count} certificates verified, including (8,3)"))
}

fn c8() -> Check {
    let mut out = Vec::new();
    for n in 2..=5u32 {
        let start = Instant::now();
        let want = if n == 2 {
            "Z/2".to_string()
        } else {
            format!("Z^{} + Z/{n}", (n - 1) * (n - 2))
        };
        for d in 3 * n..=3 * n + 2 {
            let g = box_group(&bone_cells(i64::from(n)), d).map_err(|e| e.to_string())?;
            ensure(g.to_string() == want, || {
                format!("n={n} D={d}: {g} != {want}")
            })?;
        }
        let dt = start.elapsed();
        ensure(dt < Duration::from_secs(30), || {
            format!("n={n} took {dt:?}")
        })?;
        out.push(format!("n={n} {want}"));
    }
    Ok(out.join(", "))
}

fn c9() -> Check {
    let mut yes = 0;
    for n in 2..=3u32 {
        let tiles = bone_cells(i64::from(n));
        for m in 1..=n * n + n {
            let d = oracle_decide(&tri_cells(i64::from(m)), &tiles, 2 * n)
                .map_err(|e| e.to_string())?;
            let want = admissible(u64::from(m), u64::from(n));
            ensure(d.is_yes() == want, || {
                format!("n={n} m={m}: oracle {}", d.is_yes())
            })?;
            if let OracleDecision::Yes { certificate, .. } = d {
                ensure(verify_certificate(&certificate), || {
                    format!("n={n} m={m}: invalid")
                })?;
                yes += 1;
            }
        }
    }
    Ok(format!("agrees on n=2,3; {yes} yes answers verified"))
}

fn c10() -> Check {
    for m in 0..=50 {
        ensure(verify_brion(m), || format!("m={m}"))?;
    }
    // Anchors from hand expansion.
    let delta = parse_poly("x - y - x^2 + y^2 + x^2*y - x*y^2").unwrap();
    ensure(tilegb::brion::brion_numerator(1) == delta, || {
        "m=1 anchor".into()
    })?;
    ensure(tilegb::brion::brion_numerator(0).is_zero(), || {
        "m=0 anchor".into()
    })?;
    Ok("m=0..50".into())
}

fn c11() -> Check {
    let lex = TermOrder::lex();
    let x1 = parse_poly("x - 1").unwrap();
    let y = parse_poly("y").unwrap();
    for n in 3..=8u32 {
        let [g1, g2, g3, g4] = gbi_elements(n).unwrap();
        let nn = Polynomial::constant(2, BigInt::from(n));
        let s14 = s_polynomial(&g1, &g4, &lex).unwrap();
        ensure(s14 == &(&g1 - &(&y * &g4)) + &(&x1 * &g2), || {
            format!("S(g1,g4) n={n}")
        })?;
        let s13 = s_polynomial(&g1, &g3, &lex).unwrap();
        ensure(s13 == &(-&(&nn * &g4)) - &g3, || format!("S(g1,g3) n={n}"))?;
        let s34 = s_polynomial(&g3, &g4, &lex).unwrap();
        ensure(s34 == &g3 + &(&nn * &g2), || format!("S(g3,g4) n={n}"))?;
    }
    Ok("three identities for n=3..8".into())
}

fn call(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("tilegb").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn c12() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let t6 = dir.path().join("T6");
    std::fs::write(&t6, format_poly(&tri(6)) + "\n").map_err(|e| e.to_string())?;
    let poly = format!("@{}", t6.display());
    let cases: [(Vec<&str>, &str); 3] = [
        (vec!["decide", "--n", "3", "--m", "8"], "YES\n"),
        (
            vec!["reduce", "--n", "3", "--poly", &poly, "--conv", "minabs"],
            "-1 - x - y\n",
        ),
        (vec!["homology", "--n", "3"], "Z^2 + Z/3\n"),
    ];
    for (args, want) in &cases {
        let first = call(args);
        for _ in 0..3 {
            ensure(call(args) == first, || {
                format!("{args:?} not deterministic")
            })?;
        }
        ensure(first == (0, want.as_bytes().to_vec()), || {
            format!("{args:?} gave {first:?}")
        })?;
    }
    Ok("decide, reduce and homology byte-exact over 4 runs".into())
}

fn main() {
    // (id, name, time limit in seconds, check)
    type Criterion = (u32, &'static str, u64, fn() -> Check);
    let criteria: [Criterion; 12] = [
        (1, "strong-basis verification", 10, c1),
        (2, "remainder reproduction", 10, c2),
        (3, "main theorem grid", 60, c3),
        (4, "closed form vs division", 120, c4),
        (5, "b3 lemma", 120, c5),
        (6, "completion equivalence", 180, c6),
        (7, "certificates", 30, c7),
        (8, "homology", 120, c8),
        (9, "oracle concordance", 120, c9),
        (10, "Brion identity", 5, c10),
        (11, "strong-representation identities", 10, c11),
        (12, "golden CLI outputs", 10, c12),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let dt = start.elapsed();
        let result = result.and_then(|detail| {
            if dt > Duration::from_secs(limit) {
                Err(format!("{detail}; exceeded {limit}s"))
            } else {
                Ok(detail)
            }
        });
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {id:>2} {tag} {name} ({:.2}s, limit {limit}s): {detail}",
            dt.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 12 acceptance criteria passed");
}
