//! Dense matrices over the rationals: rank, reduced row echelon form,
//! kernels and span membership. Pivoting always takes the first nonzero entry
//! in column order, so every result is reproducible.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
    row_labels: Option<Vec<Partition>>,
    col_labels: Option<Vec<Partition>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        let n = rows.len();
        Ok(QMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
            row_labels: None,
            col_labels: None,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Q::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Attaches partition labels to rows and columns.
    pub fn with_labels(mut self, rows: Vec<Partition>, cols: Vec<Partition>) -> Result<Self> {
        if rows.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rows.len(),
            });
        }
        if cols.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: cols.len(),
            });
        }
        self.row_labels = Some(rows);
        self.col_labels = Some(cols);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> Option<&[Partition]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[Partition]> {
        self.col_labels.as_deref()
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn checked_sub(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = m.get(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let sub = m.get(pivot_row, c);
                    if sub.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &factor * sub;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : Mv = 0}`, one vector per free
    /// column, each checked against the original matrix.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Q>>> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            is_pivot[col] = Some(row);
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -reduced.get(row, free).clone();
            }
            if self.mul_vec(&v)?.iter().any(|x| !x.is_zero()) {
                return Err(Error::Assertion(
                    "kernel vector does not annihilate the matrix".into(),
                ));
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Exact determinant by elimination; fails on non-square input.
    pub fn determinant(&self) -> Result<Q> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = Q::one();
        for col in 0..m.cols {
            let Some(found) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Q::zero());
            };
            if found != col {
                m.swap_rows(col, found);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of the matrix whose rows are the given vectors.
pub fn rank_of_vectors(vectors: &[Vec<Q>]) -> Result<usize> {
    Ok(QMatrix::from_rows(vectors.to_vec())?.rank())
}

/// Whether `target` is a rational combination of `vectors`.
pub fn in_span(vectors: &[Vec<Q>], target: &[Q]) -> Result<bool> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != target.len()) {
        return Err(Error::DimensionMismatch {
            expected: target.len(),
            found: bad.len(),
        });
    }
    if target.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let base = rank_of_vectors(vectors)?;
    let mut extended = vectors.to_vec();
    extended.push(target.to_vec());
    Ok(rank_of_vectors(&extended)? == base)
}
