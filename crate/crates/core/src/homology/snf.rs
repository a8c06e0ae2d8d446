use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;
use crate::polyring::{coeff_divmod, CoeffConvention};

type Row = BTreeMap<usize, BigInt>;

struct Sparse {
    rows: Vec<Row>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.col_rows[j].remove(&i);
        } else {
            self.rows[i].insert(j, v);
            self.col_rows[j].insert(i);
        }
    }

    /// `row[target] -= q * row[source]`.
    fn sub_row(&mut self, target: usize, q: &BigInt, source: &Row) {
        for (j, v) in source {
            let cur = self.rows[target].get(j).cloned().unwrap_or_default();
            self.set(target, *j, cur - q * v);
        }
    }

    /// Entry with the smallest magnitude, ties broken by Markowitz cost.
    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                let mag = v.abs();
                let cost = (row.len() - 1) * (self.col_rows[*j].len() - 1);
                let better = match &best {
                    None => true,
                    Some((bm, bc, _, _)) => mag < *bm || (mag == *bm && cost < *bc),
                };
                if better {
                    let done = mag.is_one() && cost == 0;
                    best = Some((mag, cost, i, *j));
                    if done {
                        return Some((i, *j));
                    }
                }
            }
        }
        best.map(|(_, _, i, j)| (i, j))
    }
}

fn near_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    coeff_divmod(a, p, CoeffConvention::MinAbs)
        .expect("pivot is nonzero")
        .0
}

/// Smith normal form of `m` as its positive diagonal `d1 | d2 | ...` (units
/// included) together with the rank.
///
/// Sparse elimination that always pivots on an entry of least magnitude; a
/// pivot whose row or column cannot be cleared exactly leaves a smaller
/// remainder, which becomes the next pivot.
pub fn snf(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let ncols = m.ncols();
    let rows = m.clone().into_sparse_rows();
    let mut col_rows = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for j in r.keys() {
            col_rows[*j].insert(i);
        }
    }
    let mut a = Sparse { rows, col_rows };
    let mut diag = Vec::new();

    while let Some((i, j)) = a.pick_pivot() {
        let p = a.rows[i][&j].clone();
        let pivot_row = a.rows[i].clone();
        let mut clean = true;

        let others: Vec<usize> = a.col_rows[j].iter().copied().filter(|&r| r != i).collect();
        for r in others {
            let q = near_quotient(&a.rows[r][&j], &p);
            a.sub_row(r, &q, &pivot_row);
            clean &= !a.rows[r].contains_key(&j);
        }
        if !clean {
            continue;
        }

        // Column j is now zero outside row i, so column operations only
        // touch row i.
        let entries: Vec<(usize, BigInt)> = a.rows[i]
            .iter()
            .filter(|(c, _)| **c != j)
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, v) in entries {
            let q = near_quotient(&v, &p);
            let rem = v - q * &p;
            clean &= rem.is_zero();
            a.set(i, c, rem);
        }
        if !clean {
            continue;
        }
        a.set(i, j, BigInt::zero());
        diag.push(p.abs());
    }

    let rank = diag.len();
    (divisibility_chain(diag), rank)
}

/// Rewrites a diagonal as an equivalent divisibility chain.
fn divisibility_chain(diag: Vec<BigInt>) -> Vec<BigInt> {
    let (ones, mut rest): (Vec<BigInt>, Vec<BigInt>) = diag.into_iter().partition(One::is_one);
    for a in 0..rest.len() {
        for b in a + 1..rest.len() {
            if rest[b].is_multiple_of(&rest[a]) {
                continue;
            }
            let g = rest[a].gcd(&rest[b]);
            let l = rest[a].lcm(&rest[b]);
            rest[a] = g;
            rest[b] = l;
        }
    }
    rest.sort();
    ones.into_iter().chain(rest).collect()
}
