use crate::{lcm, BooleanMatrix, CountMatrix, MatrixError};

/// A matrix whose every column is a canonical unit vector, stored as one
/// 1-based row index per column. `delta_n[i1 i2 ...]` in the usual shorthand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalMatrix {
    rows: usize,
    cols: Vec<usize>,
}

impl LogicalMatrix {
    pub fn new(rows: usize, cols: Vec<usize>) -> Result<Self, MatrixError> {
        if rows == 0 || cols.is_empty() {
            return Err(MatrixError::EmptyDimension);
        }
        for (j, &i) in cols.iter().enumerate() {
            if i == 0 || i > rows {
                return Err(MatrixError::IndexOutOfRange { col: j, index: i, rows });
            }
        }
        Ok(Self { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: (1..=n).collect() }
    }

    /// Single unit column `delta_rows^index`.
    pub fn unit(rows: usize, index: usize) -> Result<Self, MatrixError> {
        Self::new(rows, vec![index])
    }

    /// The 1-by-s matrix of all ones; left-multiplying by it drops a factor.
    pub fn ones_row(s: usize) -> Self {
        Self { rows: 1, cols: vec![1; s] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// 1-based row index of the unit entry in column `j` (0-based position).
    pub fn col(&self, j: usize) -> usize {
        self.cols[j]
    }

    pub fn entries(&self) -> &[usize] {
        &self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols.len() && self.cols.iter().enumerate().all(|(j, &i)| i == j + 1)
    }

    /// Semi-tensor product. For column matrices this realizes the composite
    /// of delta vectors; on matching inner dimensions it coincides with the
    /// ordinary product.
    pub fn stp(&self, other: &Self) -> Self {
        let p = self.cols.len();
        let q = other.rows;
        let t = lcm(p, q);
        let a = t / p;
        let b = t / q;
        let rows = self.rows * a;
        let mut cols = Vec::with_capacity(other.cols.len() * b);
        for &bj in &other.cols {
            let base = (bj - 1) * b;
            for jb in 0..b {
                let r = base + jb;
                let (ja, jr) = (r / a, r % a);
                cols.push((self.cols[ja] - 1) * a + jr + 1);
            }
        }
        Self { rows, cols }
    }

    /// Ordinary matrix product; errors if inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols.len() != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols.len(),
                right_rows: other.rows,
                right_cols: other.cols.len(),
            });
        }
        Ok(self.stp(other))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let q = other.rows;
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for &ai in &self.cols {
            for &bi in &other.cols {
                cols.push((ai - 1) * q + bi);
            }
        }
        Self { rows: self.rows * q, cols }
    }

    pub fn to_boolean(&self) -> BooleanMatrix {
        let mut b = BooleanMatrix::zeros(self.rows, self.cols.len());
        for (j, &i) in self.cols.iter().enumerate() {
            b.set(i - 1, j, true);
        }
        b
    }

    pub fn to_count(&self) -> CountMatrix {
        self.to_boolean().to_count()
    }

    /// Transpose; logical only when the matrix is a permutation, so the
    /// result is boolean in general.
    pub fn transpose(&self) -> BooleanMatrix {
        self.to_boolean().transpose()
    }
}
