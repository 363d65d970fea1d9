use crate::{lcm, BooleanMatrix, MatrixError, StochasticMatrix};
use num::BigRational;

/// Dense unsigned-integer matrix, row major. Where the boolean product only
/// records reachability, the count product accumulates how many ways each
/// entry can be reached, which is what column normalization turns into
/// probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    rows: usize,
    ncols: usize,
    data: Vec<u64>,
}

impl CountMatrix {
    pub fn new(rows: usize, ncols: usize, data: Vec<u64>) -> Result<Self, MatrixError> {
        if rows == 0 || ncols == 0 {
            return Err(MatrixError::EmptyDimension);
        }
        if data.len() != rows * ncols {
            return Err(MatrixError::ShapeMismatch { rows, cols: ncols, len: data.len() });
        }
        Ok(Self { rows, ncols, data })
    }

    pub fn zeros(rows: usize, ncols: usize) -> Self {
        Self { rows, ncols, data: vec![0; rows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        (0..self.rows).map(|i| self.get(i, j)).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.ncols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.ncols,
                right_rows: other.rows,
                right_cols: other.ncols,
            });
        }
        let mut out = Self::zeros(self.rows, other.ncols);
        for i in 0..self.rows {
            for l in 0..self.ncols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(l, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.get(i, j);
                    let add = a.checked_mul(b).ok_or(MatrixError::Overflow { col: j })?;
                    let v = cur.checked_add(add).ok_or(MatrixError::Overflow { col: j })?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.ncols * other.ncols);
        for ia in 0..self.rows {
            for ja in 0..self.ncols {
                let a = self.get(ia, ja);
                if a == 0 {
                    continue;
                }
                for ib in 0..other.rows {
                    for jb in 0..other.ncols {
                        let b = other.get(ib, jb);
                        if b != 0 {
                            out.set(ia * other.rows + ib, ja * other.ncols + jb, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Semi-tensor product via the Kronecker padding definition. Quadratic
    /// and allocation heavy, so this serves as the reference the specialized
    /// logical product is checked against, not as a hot path.
    pub fn stp(&self, other: &Self) -> Result<Self, MatrixError> {
        let t = lcm(self.ncols, other.rows);
        let a = self.kron(&Self::identity(t / self.ncols));
        let b = other.kron(&Self::identity(t / other.rows));
        a.mul(&b)
    }

    /// Replace every positive entry with 1.
    pub fn booleanize(&self) -> BooleanMatrix {
        let mut out = BooleanMatrix::zeros(self.rows, self.ncols);
        for j in 0..self.ncols {
            for i in 0..self.rows {
                if self.get(i, j) != 0 {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Divide each column by its sum, exactly. All-zero columns become dead
    /// columns of the result rather than an error.
    pub fn column_normalize(&self) -> StochasticMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        let mut dead = Vec::new();
        let sums: Vec<u64> = (0..self.ncols).map(|j| self.col_sum(j)).collect();
        for (j, &s) in sums.iter().enumerate() {
            if s == 0 {
                dead.push(j);
            }
        }
        for i in 0..self.rows {
            for j in 0..self.ncols {
                let num = self.get(i, j);
                let den = if sums[j] == 0 { 1 } else { sums[j] };
                data.push(BigRational::new(num.into(), den.into()));
            }
        }
        StochasticMatrix::from_parts(self.rows, self.ncols, data, dead)
    }
}
