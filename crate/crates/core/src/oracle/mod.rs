//! Brute-force signed tiling on a bounded box.
//!
//! Every translate of every prototile that fits in a box around the region
//! becomes a column of a 0/1 matrix whose rows are the box cells. A signed
//! tiling inside the box is an integer solution of `A z = t` with `t` the
//! region's indicator. This shares no code with the ideal-membership path.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::polyring::{coeff_divmod, CoeffConvention};
use crate::tiling::{verify_certificate, Cell, Certificate, Placement, Region, Sign};

/// Half-open rectangle `[x0, x1) x [y0, y1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellBox {
    pub x0: i64,
    pub x1: i64,
    pub y0: i64,
    pub y1: i64,
}

impl CellBox {
    pub fn width(&self) -> i64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> i64 {
        self.y1 - self.y0
    }

    pub fn contains(&self, (i, j): Cell) -> bool {
        (self.x0..self.x1).contains(&i) && (self.y0..self.y1).contains(&j)
    }

    fn index(&self, (i, j): Cell) -> usize {
        ((i - self.x0) * self.height() + (j - self.y0)) as usize
    }
}

/// The linear system `matrix * z = target` for placements inside `cell_box`.
#[derive(Clone, Debug)]
pub struct PlacementSystem {
    pub cell_box: CellBox,
    pub columns: Vec<Placement>,
    pub matrix: IntMatrix,
    pub target: Vec<BigInt>,
}

impl PlacementSystem {
    /// Box = bounding box of `region` grown by `margin` on every side.
    pub fn build(region: &Region, prototiles: &[Region], margin: u32) -> Result<Self> {
        if prototiles.is_empty() {
            return Err(Error::InvalidArgument("empty prototile list".into()));
        }
        let m = i64::from(margin);
        let ((rx0, ry0), (rx1, ry1)) = region.bounding_box().unwrap_or(((0, 0), (-1, -1)));
        let cell_box = CellBox {
            x0: rx0 - m,
            x1: rx1 + 1 + m,
            y0: ry0 - m,
            y1: ry1 + 1 + m,
        };
        let nrows = (cell_box.width().max(0) * cell_box.height().max(0)) as usize;

        let mut columns = Vec::new();
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for (tile, p) in prototiles.iter().enumerate() {
            let Some(((tx0, ty0), (tx1, ty1))) = p.bounding_box() else {
                return Err(Error::InvalidArgument("empty prototile".into()));
            };
            for a in cell_box.x0 - tx0..cell_box.x1 - tx1 {
                for b in cell_box.y0 - ty0..cell_box.y1 - ty1 {
                    let col = columns.len();
                    columns.push(Placement {
                        tile,
                        shift: (a, b),
                        sign: Sign::Plus,
                    });
                    entries.extend(
                        p.cells()
                            .map(|(i, j)| (cell_box.index((i + a, j + b)), col)),
                    );
                }
            }
        }
        let mut matrix = IntMatrix::zeros(nrows, columns.len());
        for (r, c) in entries {
            matrix.set(r, c, BigInt::one());
        }
        let mut target = vec![BigInt::zero(); nrows];
        for cell in region.cells() {
            target[cell_box.index(cell)] = BigInt::one();
        }
        Ok(PlacementSystem {
            cell_box,
            columns,
            matrix,
            target,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleDecision {
    /// An integer solution and the signed tiling it encodes.
    Yes {
        solution: Vec<BigInt>,
        certificate: Certificate,
    },
    /// No signed tiling uses only placements inside the box. Tiles outside
    /// the box might still help, so this is evidence, not proof.
    NoSolutionInBox,
}

impl OracleDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, OracleDecision::Yes { .. })
    }
}

pub fn oracle_decide(
    region: &Region,
    prototiles: &[Region],
    margin: u32,
) -> Result<OracleDecision> {
    let sys = PlacementSystem::build(region, prototiles, margin)?;
    let Some(z) = hnf_solve(&sys.matrix, &sys.target)? else {
        return Ok(OracleDecision::NoSolutionInBox);
    };
    let mut placements = Vec::new();
    for (col, v) in sys.columns.iter().zip(&z) {
        let reps = v
            .abs()
            .to_u64()
            .ok_or_else(|| Error::Internal(format!("multiplicity {v} too large")))?;
        let sign = if v.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        };
        placements.extend((0..reps).map(|_| Placement { sign, ..*col }));
    }
    let certificate = Certificate {
        prototiles: prototiles.to_vec(),
        placements,
        region: region.clone(),
    };
    if !verify_certificate(&certificate) {
        return Err(Error::Internal("oracle solution does not verify".into()));
    }
    Ok(OracleDecision::Yes {
        solution: z,
        certificate,
    })
}

type SparseVec = BTreeMap<usize, BigInt>;

/// `v -= q * w`.
fn axpy(v: &mut SparseVec, q: &BigInt, w: &SparseVec) {
    for (k, x) in w {
        let e = v.entry(*k).or_default();
        *e -= q * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

/// Some integer solution of `a * z = t`, or `None` when there is none.
///
/// Unimodular column operations bring `a` to column echelon form while the
/// same operations are recorded on an identity; forward substitution then
/// decides solvability exactly.
pub fn hnf_solve(a: &IntMatrix, t: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let (nrows, ncols) = (a.nrows(), a.ncols());
    if t.len() != nrows {
        return Err(Error::DimensionMismatch(format!(
            "target of length {} against {nrows} rows",
            t.len()
        )));
    }
    let mut cols: Vec<SparseVec> = vec![SparseVec::new(); ncols];
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nrows];
    for (r, index) in row_cols.iter_mut().enumerate() {
        for (c, v) in a.row(r) {
            cols[c].insert(r, v.clone());
            index.insert(c);
        }
    }
    let mut transform: Vec<SparseVec> = (0..ncols)
        .map(|c| SparseVec::from([(c, BigInt::one())]))
        .collect();

    let mut pivots: Vec<Option<usize>> = vec![None; nrows];
    for r in 0..nrows {
        loop {
            let active: Vec<usize> = row_cols[r].iter().copied().collect();
            let Some(&p) = active
                .iter()
                .min_by_key(|&&c| (cols[c][&r].abs(), cols[c].len()))
            else {
                break;
            };
            if active.len() == 1 {
                pivots[r] = Some(p);
                for &k in cols[p].keys() {
                    row_cols[k].remove(&p);
                }
                break;
            }
            let pivot_col = cols[p].clone();
            let pivot_tr = transform[p].clone();
            let pv = pivot_col[&r].clone();
            for c in active.into_iter().filter(|&c| c != p) {
                let q = coeff_divmod(&cols[c][&r], &pv, CoeffConvention::MinAbs)?.0;
                let before: Vec<usize> = cols[c].keys().copied().collect();
                axpy(&mut cols[c], &q, &pivot_col);
                axpy(&mut transform[c], &q, &pivot_tr);
                for k in before {
                    if !cols[c].contains_key(&k) {
                        row_cols[k].remove(&c);
                    }
                }
                for &k in cols[c].keys() {
                    row_cols[k].insert(c);
                }
            }
        }
    }

    let mut residual: SparseVec = t
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, v.clone()))
        .collect();
    let mut z = SparseVec::new();
    for r in 0..nrows {
        let Some(v) = residual.get(&r).cloned() else {
            continue;
        };
        let Some(p) = pivots[r] else {
            return Ok(None);
        };
        let (y, rem) = v.div_rem(&cols[p][&r]);
        if !rem.is_zero() {
            return Ok(None);
        }
        axpy(&mut residual, &y, &cols[p]);
        axpy(&mut z, &(-&y), &transform[p]);
    }
    let z: Vec<BigInt> = (0..ncols)
        .map(|c| z.get(&c).cloned().unwrap_or_default())
        .collect();
    if a.mul_vec(&z)? != t {
        return Err(Error::Internal("solver produced a non-solution".into()));
    }
    Ok(Some(z))
}
