//! Lattice regions, Newton polynomials and signed tilings.
//!
//! Cell `(i, j)` of the hexagonal lattice corresponds to the monomial
//! `x^i y^j`. A signed tiling of a region is a list of translated prototiles
//! with signs whose signed indicator functions sum to the region's indicator.

mod decide;
mod io;
mod render;

pub use decide::{
    certificate_nbone, decide_signed_tiling, laurent_stable, TilingDecision, DEFAULT_MAX_ROUNDS,
};
pub use io::{
    format_certificate, format_region, format_tiles, parse_certificate, parse_region, parse_tiles,
    CertificateFile,
};
pub use render::{render, RenderFormat, Renderable};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

pub type Cell = (i64, i64);

/// A finite set of lattice cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Region {
    cells: BTreeSet<Cell>,
}

impl Region {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.cells.insert(cell)
    }

    pub fn translate(&self, (dx, dy): Cell) -> Region {
        self.cells().map(|(i, j)| (i + dx, j + dy)).collect()
    }

    /// `(min corner, max corner)`, or `None` when empty.
    pub fn bounding_box(&self) -> Option<(Cell, Cell)> {
        let mut it = self.cells();
        let first = it.next()?;
        Some(it.fold((first, first), |((x0, y0), (x1, y1)), (i, j)| {
            ((x0.min(i), y0.min(j)), (x1.max(i), y1.max(j)))
        }))
    }

    /// Region of a polynomial whose coefficients are all 1.
    pub fn from_polynomial(p: &Polynomial) -> Result<Region> {
        if p.arity() != 2 {
            return Err(Error::ArityMismatch {
                left: 2,
                right: p.arity(),
            });
        }
        p.terms()
            .map(|(m, c)| {
                if c.is_one() {
                    Ok((i64::from(m.exponent(0)), i64::from(m.exponent(1))))
                } else {
                    Err(Error::InvalidArgument(format!(
                        "coefficient {c} is not 1; not the Newton polynomial of a region"
                    )))
                }
            })
            .collect()
    }
}

impl FromIterator<Cell> for Region {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Region {
            cells: iter.into_iter().collect(),
        }
    }
}

/// `sum x^p y^q` over the cells `(p, q)` of `r`.
pub fn newton_polynomial(r: &Region) -> Result<Polynomial> {
    let mut out = Polynomial::zero(2);
    for (i, j) in r.cells() {
        let (Ok(a), Ok(b)) = (u32::try_from(i), u32::try_from(j)) else {
            return Err(Error::NegativeCoordinate(i, j));
        };
        out.add_term(BigInt::one(), Monomial::xy(a, b));
    }
    Ok(out)
}

/// Translates `r` so its minimum coordinate is 0 in each axis. Returns the
/// translated region and the shift that was added to every cell.
pub fn normalize_region(r: &Region) -> (Region, Cell) {
    match r.bounding_box() {
        None => (Region::new(), (0, 0)),
        Some(((x0, y0), _)) => {
            let shift = (-x0, -y0);
            (r.translate(shift), shift)
        }
    }
}

/// Cells of the triangle `T(m)`: `i, j >= 0`, `i + j <= m - 1`.
pub fn triangle_region(m: u32) -> Region {
    let m = i64::from(m);
    (0..m)
        .flat_map(|i| (0..m - i).map(move |j| (i, j)))
        .collect()
}

/// The three n-bones in the order of the generators `b1, b2, b3`.
pub fn nbone_prototiles(n: u32) -> Vec<Region> {
    let n = i64::from(n);
    vec![
        (0..n).map(|i| (i, 0)).collect(),
        (0..n).map(|i| (0, i)).collect(),
        (0..n).map(|i| (n - 1 - i, i)).collect(),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One signed translate of a prototile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub tile: usize,
    pub shift: Cell,
    pub sign: Sign,
}

/// A signed tiling witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub prototiles: Vec<Region>,
    pub placements: Vec<Placement>,
    pub region: Region,
}

/// Checks a certificate cell by cell with integer counters; no polynomial
/// arithmetic is involved.
pub fn verify_certificate(c: &Certificate) -> bool {
    let mut count: HashMap<Cell, i64> = HashMap::new();
    for p in &c.placements {
        let Some(tile) = c.prototiles.get(p.tile) else {
            return false;
        };
        for (i, j) in tile.cells() {
            *count.entry((i + p.shift.0, j + p.shift.1)).or_default() += p.sign.value();
        }
    }
    count.retain(|_, v| *v != 0);
    count.len() == c.region.len() && c.region.cells().all(|cell| count.get(&cell) == Some(&1))
}

/// Expands per-tile cofactor polynomials into unit placements. Term
/// `c x^a y^b` of cofactor `j` becomes `|c|` copies of tile `j` shifted by
/// `(a, b) + offset[j]`.
pub(crate) fn placements_from_cofactors(
    cofactors: &[Polynomial],
    offsets: &[Cell],
) -> Result<Vec<Placement>> {
    let mut out = Vec::new();
    for (tile, (q, off)) in cofactors.iter().zip(offsets).enumerate() {
        for (m, c) in q.terms() {
            let reps = c
                .abs()
                .to_u64()
                .ok_or_else(|| Error::InvalidArgument(format!("multiplicity {c} too large")))?;
            let sign = if c.is_negative() {
                Sign::Minus
            } else {
                Sign::Plus
            };
            let shift = (
                i64::from(m.exponent(0)) + off.0,
                i64::from(m.exponent(1)) + off.1,
            );
            out.extend((0..reps).map(|_| Placement { tile, shift, sign }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bones::triangle;
    use crate::polyring::parse_poly;
    use proptest::prelude::*;

    #[test]
    fn newton_examples() {
        let r: Region = [(2, 2), (3, 2), (4, 2)].into_iter().collect();
        assert_eq!(
            newton_polynomial(&r).unwrap(),
            parse_poly("x^2*y^2 + x^3*y^2 + x^4*y^2").unwrap()
        );
        let one: Region = [(0, 0)].into_iter().collect();
        assert_eq!(newton_polynomial(&one).unwrap(), Polynomial::one(2));
        for m in 0..12 {
            assert_eq!(newton_polynomial(&triangle_region(m)).unwrap(), triangle(m));
        }
        let neg: Region = [(0, -1)].into_iter().collect();
        assert_eq!(
            newton_polynomial(&neg),
            Err(Error::NegativeCoordinate(0, -1))
        );
    }

    #[test]
    fn normalize_examples() {
        let r: Region = [(-1, 5)].into_iter().collect();
        let (n, s) = normalize_region(&r);
        assert_eq!(n, [(0, 0)].into_iter().collect());
        assert_eq!(s, (1, -5));
        let t = triangle_region(4);
        assert_eq!(normalize_region(&t), (t.clone(), (0, 0)));
        assert_eq!(normalize_region(&Region::new()), (Region::new(), (0, 0)));
    }

    #[test]
    fn nbone_tiles_match_generators() {
        let sys = crate::bones::bone_system(4).unwrap();
        let tiles = nbone_prototiles(4);
        for (t, g) in tiles.iter().zip(sys.generators()) {
            assert_eq!(&newton_polynomial(t).unwrap(), g);
        }
    }

    #[test]
    fn verify_examples() {
        let bar: Region = [(0, 0), (1, 0), (2, 0)].into_iter().collect();
        let c = Certificate {
            prototiles: vec![bar.clone()],
            placements: vec![Placement {
                tile: 0,
                shift: (0, 0),
                sign: Sign::Plus,
            }],
            region: bar.clone(),
        };
        assert!(verify_certificate(&c));
        assert!(verify_certificate(&Certificate::default()));
        let cancel = Certificate {
            prototiles: vec![bar.clone()],
            placements: vec![
                Placement {
                    tile: 0,
                    shift: (0, 0),
                    sign: Sign::Plus,
                },
                Placement {
                    tile: 0,
                    shift: (0, 0),
                    sign: Sign::Minus,
                },
            ],
            region: Region::new(),
        };
        assert!(verify_certificate(&cancel));
        let wrong = Certificate {
            placements: vec![Placement {
                tile: 0,
                shift: (1, 0),
                sign: Sign::Plus,
            }],
            ..c.clone()
        };
        assert!(!verify_certificate(&wrong));
        let bad_index = Certificate {
            placements: vec![Placement {
                tile: 3,
                shift: (0, 0),
                sign: Sign::Plus,
            }],
            ..c
        };
        assert!(!verify_certificate(&bad_index));
    }

    proptest! {
        #[test]
        fn newton_bijection(cells in prop::collection::btree_set((0i64..12, 0i64..12), 0..30)) {
            let r: Region = cells.into_iter().collect();
            let p = newton_polynomial(&r).unwrap();
            prop_assert_eq!(p.len(), r.len());
            prop_assert_eq!(Region::from_polynomial(&p).unwrap(), r);
        }

        #[test]
        fn normalization_preserves_shape(
            cells in prop::collection::btree_set((-20i64..20, -20i64..20), 1..20)
        ) {
            let r: Region = cells.into_iter().collect();
            let (n, s) = normalize_region(&r);
            prop_assert_eq!(n.len(), r.len());
            prop_assert_eq!(n.translate((-s.0, -s.1)), r);
            let ((x0, y0), _) = n.bounding_box().unwrap();
            prop_assert_eq!((x0, y0), (0, 0));
        }
    }
}
