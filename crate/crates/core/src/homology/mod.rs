//! Tile homology groups.
//!
//! The quotient `Z[x, y] / I` is approximated on the box `[0, D)^2`: one
//! generator per cell and one relation per translate of a prototile that fits
//! in the box. Smith normal form of the relation matrix gives the group.

mod snf;

pub use snf::snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::matrix::IntMatrix;
use crate::polyring::{is_unit, Monomial};
use crate::tiling::{normalize_region, Region};

/// A finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds the group `Z^free_rank + sum Z/c` for arbitrary cyclic orders.
    /// Zero orders count as free summands; units are dropped.
    pub fn from_cyclic(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free_rank = free_rank;
        let mut diag = Vec::new();
        for c in orders {
            if c.is_zero() {
                free_rank += 1;
            } else {
                diag.push(c.abs());
            }
        }
        let m = diagonal_matrix(&diag);
        let (factors, _) = snf(&m);
        AbelianGroup {
            free_rank,
            invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Cokernel of the integer matrix whose rows are relations among its
    /// columns.
    pub fn cokernel(relations: &IntMatrix) -> Self {
        let (factors, rank) = snf(relations);
        AbelianGroup {
            free_rank: relations.ncols() - rank,
            invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

fn diagonal_matrix(diag: &[BigInt]) -> IntMatrix {
    let mut m = IntMatrix::zeros(diag.len(), diag.len());
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, d.clone());
    }
    m
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Box presentation: generators are the monomials `x^i y^j` with
/// `0 <= i, j < D` in lex order; each relation row is a translate of a
/// prototile lying in the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Monomial>,
    pub relations: IntMatrix,
}

pub fn box_presentation(prototiles: &[Region], size: u32) -> Result<Presentation> {
    if prototiles.is_empty() {
        return Err(Error::InvalidArgument("empty prototile list".into()));
    }
    let d = i64::from(size);
    let generators: Vec<Monomial> = (0..size)
        .flat_map(|i| (0..size).map(move |j| Monomial::xy(i, j)))
        .collect();
    let index = |(i, j): (i64, i64)| (i * d + j) as usize;
    let mut relations = IntMatrix::zeros(0, generators.len());
    for tile in prototiles {
        let (norm, _) = normalize_region(tile);
        let Some((_, (w, h))) = norm.bounding_box() else {
            return Err(Error::InvalidArgument("empty prototile".into()));
        };
        if w >= d || h >= d {
            return Err(Error::InvalidArgument(format!(
                "box of size {size} cannot hold a prototile of extent {}",
                w.max(h) + 1
            )));
        }
        for a in 0..d - w {
            for b in 0..d - h {
                relations.push_row(
                    norm.cells()
                        .map(|(i, j)| (index((i + a, j + b)), BigInt::one())),
                );
            }
        }
    }
    Ok(Presentation {
        generators,
        relations,
    })
}

/// Cokernel of the box presentation of size `size`.
pub fn box_group(prototiles: &[Region], size: u32) -> Result<AbelianGroup> {
    Ok(AbelianGroup::cokernel(
        &box_presentation(prototiles, size)?.relations,
    ))
}

/// Box groups for sizes `start, start + 1, ...` up to `max`, stopping once
/// three consecutive sizes agree. Returns the last group computed and whether
/// it stabilized.
pub fn stabilized_group(
    prototiles: &[Region],
    start: u32,
    max: u32,
) -> Result<(AbelianGroup, bool)> {
    if start > max {
        return Err(Error::InvalidArgument(format!(
            "start size {start} exceeds maximum {max}"
        )));
    }
    let mut history: Vec<AbelianGroup> = Vec::new();
    for size in start..=max {
        history.push(box_group(prototiles, size)?);
        if let [.., a, b, c] = &history[..] {
            if a == b && b == c {
                return Ok((c.clone(), true));
            }
        }
    }
    Ok((history.pop().expect("at least one size"), false))
}

/// `Z^((n-1)(n-2)) + Z/n`.
pub fn nbone_homology(n: u32) -> Result<AbelianGroup> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bone length must be >= 2, got {n}"
        )));
    }
    let n_us = n as usize;
    Ok(AbelianGroup {
        free_rank: (n_us - 1) * (n_us - 2),
        invariant_factors: vec![BigInt::from(n)],
    })
}

/// Group read off a strong basis: each monomial `m` spans `Z/c_m`, where
/// `c_m` is the gcd of the leading coefficients of the elements whose
/// leading monomial divides `m` (zero, hence free, when there are none).
///
/// Requires a pure power with leading coefficient 1 in every variable so
/// that only finitely many monomials contribute.
pub fn standard_monomial_group(basis: &GroebnerBasis) -> Result<AbelianGroup> {
    let arity = basis.arity();
    let leads = basis.leading_terms();
    let mut bounds = Vec::with_capacity(arity);
    for v in 0..arity {
        let bound = leads
            .iter()
            .filter(|(m, c)| {
                is_unit(c)
                    && m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(k, e)| k == v || *e == 0)
            })
            .map(|(m, _)| m.exponent(v))
            .min()
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "no unit pure power in variable {v}; quotient is not finitely generated"
                ))
            })?;
        bounds.push(bound);
    }
    let mut orders = Vec::new();
    let mut exps = vec![0u32; arity];
    'outer: loop {
        let m = Monomial::new(exps.clone());
        let c = leads
            .iter()
            .filter(|(lm, _)| lm.divides(&m))
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if !c.is_one() {
            orders.push(c);
        }
        for k in 0..arity {
            exps[k] += 1;
            if exps[k] < bounds[k] {
                continue 'outer;
            }
            exps[k] = 0;
        }
        break;
    }
    Ok(AbelianGroup::from_cyclic(0, orders))
}
