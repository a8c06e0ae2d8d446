use num_bigint::BigInt;
use num_traits::One;

use super::{
    nbone_prototiles, newton_polynomial, normalize_region, placements_from_cofactors,
    triangle_region, verify_certificate, Cell, Certificate, Region,
};
use crate::bones::{bone_system, decide_nbone, triangle};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_member, reduce, GroebnerBasis};
use crate::polyring::{CoeffConvention, Monomial, Polynomial, TermOrder};

pub const DEFAULT_MAX_ROUNDS: u32 = 8;

/// Largest `k` tried when looking for `v^k - 1` in the ideal.
const MAX_UNIT_ORDER: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingDecision {
    Yes(Certificate),
    No,
    Inconclusive,
}

impl TilingDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, TilingDecision::Yes(_))
    }
}

/// Decides whether `region` has a signed tiling by translates of
/// `prototiles`.
///
/// Membership of `(xy)^(tD) f_region` in the tile ideal is tested for
/// `t = 0..=max_rounds`. A member yields a verified certificate. A non-member
/// at round 0 is a definite `No` when [`laurent_stable`] holds, since then no
/// monomial multiple can enter the ideal. Otherwise the answer after the last
/// round is `Inconclusive`.
pub fn decide_signed_tiling(
    region: &Region,
    prototiles: &[Region],
    max_rounds: u32,
) -> Result<TilingDecision> {
    if prototiles.is_empty() {
        return Err(Error::InvalidArgument("empty prototile list".into()));
    }
    if prototiles.iter().any(Region::is_empty) {
        return Err(Error::InvalidArgument("empty prototile".into()));
    }
    if region.is_empty() {
        return Ok(TilingDecision::Yes(Certificate {
            prototiles: prototiles.to_vec(),
            placements: Vec::new(),
            region: Region::new(),
        }));
    }

    let mut tile_polys = Vec::with_capacity(prototiles.len());
    let mut tile_shifts = Vec::with_capacity(prototiles.len());
    let mut extent = 0i64;
    for p in prototiles {
        let (norm, shift) = normalize_region(p);
        let (_, (w, h)) = norm.bounding_box().expect("nonempty");
        extent = extent.max(w).max(h);
        tile_polys.push(newton_polynomial(&norm)?);
        tile_shifts.push(shift);
    }
    let step = extent + 1;
    let (norm_region, region_shift) = normalize_region(region);
    let f = newton_polynomial(&norm_region)?;

    let basis = buchberger(
        &tile_polys,
        &TermOrder::lex(),
        CoeffConvention::NonNeg,
        true,
    )?;
    let stable = laurent_stable(&basis, &tile_polys)?;

    for t in 0..=max_rounds {
        let e = u32::try_from(i64::from(t) * step)
            .map_err(|_| Error::InvalidArgument("test monomial exponent overflow".into()))?;
        let probe = f.mul_term(&BigInt::one(), &Monomial::xy(e, e));
        let red = reduce(&probe, &basis)?;
        if red.remainder.is_zero() {
            let cofactors = basis
                .lift(&red.quotients)
                .ok_or_else(|| Error::Internal("basis lost its cofactors".into()))?;
            let back = i64::from(e);
            let offsets: Vec<Cell> = tile_shifts
                .iter()
                .map(|s| (s.0 - back - region_shift.0, s.1 - back - region_shift.1))
                .collect();
            let cert = Certificate {
                prototiles: prototiles.to_vec(),
                placements: placements_from_cofactors(&cofactors, &offsets)?,
                region: region.clone(),
            };
            if !verify_certificate(&cert) {
                return Err(Error::Internal(
                    "extracted certificate does not verify".into(),
                ));
            }
            return Ok(TilingDecision::Yes(cert));
        }
        if stable {
            return Ok(TilingDecision::No);
        }
    }
    Ok(TilingDecision::Inconclusive)
}

/// Whether membership in the ideal is unaffected by passing to Laurent
/// polynomials. True when each variable either has `v^k - 1` in the ideal
/// for some `k <= 256`, making `v` invertible, or occurs in no generator,
/// making it a non-zero-divisor on the quotient.
pub fn laurent_stable(basis: &GroebnerBasis, generators: &[Polynomial]) -> Result<bool> {
    let arity = basis.arity();
    let one = Polynomial::one(arity);
    for v in 0..arity {
        if generators.iter().all(|g| g.degree_in(v).unwrap_or(0) == 0) {
            continue;
        }
        let var = Monomial::var(arity, v);
        let mut r = one.clone();
        let mut unit = false;
        for _ in 0..MAX_UNIT_ORDER {
            r = reduce(&r.mul_term(&BigInt::one(), &var), basis)?.remainder;
            if r == one {
                unit = true;
                break;
            }
        }
        if !unit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signed tiling of `T(m)` by n-bones, read off from the cofactors of the
/// reduction of `T(m)` against the explicit n-bone basis.
pub fn certificate_nbone(m: u32, n: u32) -> Result<Certificate> {
    if !decide_nbone(u64::from(m), n)? {
        return Err(Error::InvalidArgument(format!(
            "T({m}) has no signed tiling by {n}-bones"
        )));
    }
    let sys = bone_system(n)?;
    let quotients = ideal_member(&triangle(m), sys.gbi())?
        .ok_or_else(|| Error::Internal(format!("T({m}) not reduced to zero")))?;
    let cofactors = sys
        .gbi()
        .lift(&quotients)
        .ok_or_else(|| Error::Internal("basis lost its cofactors".into()))?;
    let cert = Certificate {
        prototiles: nbone_prototiles(n),
        placements: placements_from_cofactors(&cofactors, &[(0, 0); 3])?,
        region: triangle_region(m),
    };
    if !verify_certificate(&cert) {
        return Err(Error::Internal(
            "extracted certificate does not verify".into(),
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cells(c: &[Cell]) -> Region {
        c.iter().copied().collect()
    }

    #[test]
    fn three_bones_tile_t8() {
        let d = decide_signed_tiling(&triangle_region(8), &nbone_prototiles(3), 0).unwrap();
        let TilingDecision::Yes(c) = d else {
            panic!("expected yes, got {d:?}")
        };
        assert!(verify_certificate(&c));
    }

    #[test]
    fn single_cell_cases() {
        let cell = cells(&[(0, 0)]);
        let TilingDecision::Yes(c) =
            decide_signed_tiling(&cell, std::slice::from_ref(&cell), 0).unwrap()
        else {
            panic!()
        };
        assert_eq!(c.placements.len(), 1);
        let domino = cells(&[(0, 0), (1, 0)]);
        assert_eq!(
            decide_signed_tiling(&cell, &[domino], 8).unwrap(),
            TilingDecision::No
        );
    }

    #[test]
    fn domino_remainders_stay_nonzero() {
        // x^k reduces to (-1)^k modulo 1 + x.
        let g = buchberger(
            &[Polynomial::from_xy([(1, 0, 0), (1, 1, 0)])],
            &TermOrder::lex(),
            CoeffConvention::NonNeg,
            false,
        )
        .unwrap();
        for k in 0..12u32 {
            let r = reduce(&Polynomial::term(1, Monomial::xy(k, 0)), &g)
                .unwrap()
                .remainder;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(r, Polynomial::constant(2, sign));
        }
    }

    #[test]
    fn membership_after_shift() {
        // The ideal is <x, 1 + y>: 1 is not a member but x y is, so the
        // answer appears only in round 1.
        let region = cells(&[(0, 0)]);
        let tile = cells(&[(0, 0), (0, 1), (1, 0)]);
        let pair = cells(&[(0, 0), (0, 1)]);
        let tiles = [tile, pair];
        assert_eq!(
            decide_signed_tiling(&region, &tiles, 0).unwrap(),
            TilingDecision::Inconclusive
        );
        let TilingDecision::Yes(c) = decide_signed_tiling(&region, &tiles, 1).unwrap() else {
            panic!("expected yes")
        };
        assert!(verify_certificate(&c));
    }

    #[test]
    fn agrees_with_closed_form() {
        for n in 2..=3u32 {
            let tiles = nbone_prototiles(n);
            for m in 1..=2 * n * n {
                let d = decide_signed_tiling(&triangle_region(m), &tiles, 0).unwrap();
                let want = decide_nbone(u64::from(m), n).unwrap();
                assert_eq!(d.is_yes(), want, "n={n} m={m}");
                if !want {
                    assert_eq!(d, TilingDecision::No);
                }
            }
        }
    }

    #[test]
    fn nbone_certificates() {
        for n in 2..=4u32 {
            for m in 1..=2 * n * n {
                if decide_nbone(u64::from(m), n).unwrap() {
                    assert!(verify_certificate(&certificate_nbone(m, n).unwrap()));
                }
            }
        }
        let c = certificate_nbone(3, 2).unwrap();
        assert_eq!(c.region.len(), 6);
        assert!(matches!(
            certificate_nbone(5, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rejects_empty_inputs() {
        assert!(decide_signed_tiling(&cells(&[(0, 0)]), &[], 1).is_err());
        assert!(decide_signed_tiling(&cells(&[(0, 0)]), &[Region::new()], 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn translation_invariance(m in 1u32..12, dx in -9i64..9, dy in -9i64..9) {
            let tiles = nbone_prototiles(3);
            let t = triangle_region(m);
            let a = decide_signed_tiling(&t, &tiles, 0).unwrap();
            let b = decide_signed_tiling(&t.translate((dx, dy)), &tiles, 0).unwrap();
            prop_assert_eq!(a.is_yes(), b.is_yes());
            if let TilingDecision::Yes(c) = b {
                prop_assert!(verify_certificate(&c));
            }
        }

        #[test]
        fn shifted_tiles(dx in -5i64..5, dy in -5i64..5) {
            let tiles: Vec<Region> =
                nbone_prototiles(2).iter().map(|p| p.translate((dx, dy))).collect();
            let d = decide_signed_tiling(&triangle_region(3), &tiles, 0).unwrap();
            prop_assert!(d.is_yes());
        }
    }
}
