//! Sparse integer matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Row-major sparse matrix with arbitrary-precision entries. Zero entries
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            cols,
            rows: vec![BTreeMap::new(); rows],
        }
    }

    /// Dense constructor; every row must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    /// Panics when `(i, j)` is out of bounds.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(j < self.cols, "column {j} out of range");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    /// Appends a row given as `(column, value)` pairs.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, BigInt)>) {
        let i = self.rows.len();
        self.rows.push(BTreeMap::new());
        for (j, v) in entries {
            let cur = self.get(i, j);
            self.set(i, j, cur + v);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.rows[i].iter().map(|(j, v)| (*j, v))
    }

    pub(crate) fn into_sparse_rows(self) -> Vec<BTreeMap<usize, BigInt>> {
        self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                t.rows[*j].insert(i, v.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        if z.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                z.len(),
                self.cols
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().map(|(j, v)| v * &z[*j]).sum())
            .collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows())
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let m = IntMatrix::from_rows(&[vec![1, 0, 2], vec![0, 0, -3]]).unwrap();
        assert_eq!((m.nrows(), m.ncols(), m.nnz()), (2, 3, 3));
        assert_eq!(m.get(1, 2), BigInt::from(-3));
        let z: Vec<BigInt> = [1, 5, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(
            m.mul_vec(&z).unwrap(),
            vec![BigInt::from(3), BigInt::from(-3)]
        );
        assert!(m.mul_vec(&z[..2]).is_err());
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().get(2, 0), BigInt::from(2));
        assert!(IntMatrix::from_rows(&[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn push_row_accumulates() {
        let mut m = IntMatrix::zeros(0, 2);
        m.push_row([
            (0, BigInt::from(1)),
            (0, BigInt::from(-1)),
            (1, BigInt::from(4)),
        ]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.to_dense(), vec![vec![BigInt::from(0), BigInt::from(4)]]);
    }
}
