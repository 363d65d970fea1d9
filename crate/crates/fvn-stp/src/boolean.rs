use crate::{CountMatrix, LogicalMatrix, MatrixError};

/// A 0/1 matrix stored as per-column bitsets. The product of boolean
/// matrices ORs where an integer product would add, so an entry records
/// reachability rather than multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanMatrix {
    rows: usize,
    words: usize,
    cols: Vec<Vec<u64>>,
}

impl BooleanMatrix {
    pub fn zeros(rows: usize, ncols: usize) -> Self {
        let words = rows.div_ceil(64);
        Self { rows, words, cols: vec![vec![0; words]; ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn ones(rows: usize, ncols: usize) -> Self {
        let mut m = Self::zeros(rows, ncols);
        for j in 0..ncols {
            for i in 0..rows {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Build from per-column sets of 1-based row indices.
    pub fn from_col_sets(rows: usize, sets: &[Vec<usize>]) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(rows, sets.len());
        for (j, set) in sets.iter().enumerate() {
            for &i in set {
                if i == 0 || i > rows {
                    return Err(MatrixError::IndexOutOfRange { col: j, index: i, rows });
                }
                m.set(i - 1, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cols[j][i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.cols[j][i / 64];
        if v {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    /// 1-based row indices of the ones in column `j`, ascending.
    pub fn col_ones(&self, j: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.cols[j].iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn col_count(&self, j: usize) -> usize {
        self.cols[j].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_is_empty(&self, j: usize) -> bool {
        self.cols[j].iter().all(|&w| w == 0)
    }

    /// Boolean matrix product: entry (i,j) is 1 iff some index l has
    /// `self[i,l]` and `other[l,j]` both 1.
    pub fn bool_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols.len() != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols.len(),
                right_rows: other.rows,
                right_cols: other.cols.len(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols.len());
        for j in 0..other.cols.len() {
            let dst = &mut out.cols[j];
            for l in other.col_ones(j) {
                for (w, &word) in self.cols[l - 1].iter().enumerate() {
                    dst[w] |= word;
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols.len() * other.cols.len());
        for ja in 0..self.cols.len() {
            let a_ones: Vec<usize> = self.col_ones(ja);
            for jb in 0..other.cols.len() {
                let j = ja * other.cols.len() + jb;
                for &ia in &a_ones {
                    for ib in other.col_ones(jb) {
                        out.set((ia - 1) * other.rows + ib - 1, j, true);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols.len(), self.rows);
        for j in 0..self.cols.len() {
            for i in self.col_ones(j) {
                out.set(j, i - 1, true);
            }
        }
        out
    }

    /// Logical form when every column is a unit vector.
    pub fn to_logical(&self) -> Option<LogicalMatrix> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for j in 0..self.cols.len() {
            let ones = self.col_ones(j);
            match ones.as_slice() {
                [i] => cols.push(*i),
                _ => return None,
            }
        }
        LogicalMatrix::new(self.rows, cols).ok()
    }

    pub fn to_count(&self) -> CountMatrix {
        let mut out = CountMatrix::zeros(self.rows, self.cols.len());
        for j in 0..self.cols.len() {
            for i in self.col_ones(j) {
                out.set(i - 1, j, 1);
            }
        }
        out
    }
}
