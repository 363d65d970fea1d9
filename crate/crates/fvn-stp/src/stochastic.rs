use crate::MatrixError;
use num::{BigRational, One, Zero};

/// Column-stochastic matrix over exact rationals. Columns sum to one, except
/// for explicitly tracked dead columns (all zero), which stand for
/// state/input pairs with no admissible successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StochasticMatrix {
    rows: usize,
    ncols: usize,
    data: Vec<BigRational>,
    dead: Vec<usize>,
}

impl StochasticMatrix {
    pub(crate) fn from_parts(
        rows: usize,
        ncols: usize,
        data: Vec<BigRational>,
        dead: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows * ncols);
        Self { rows, ncols, data, dead }
    }

    /// Validating constructor for externally supplied data (row major).
    pub fn new(rows: usize, ncols: usize, data: Vec<BigRational>) -> Result<Self, MatrixError> {
        if rows == 0 || ncols == 0 {
            return Err(MatrixError::EmptyDimension);
        }
        if data.len() != rows * ncols {
            return Err(MatrixError::ShapeMismatch { rows, cols: ncols, len: data.len() });
        }
        for i in 0..rows {
            for j in 0..ncols {
                let v = &data[i * ncols + j];
                if v < &BigRational::zero() || v > &BigRational::one() {
                    return Err(MatrixError::BadProbability {
                        row: i,
                        col: j,
                        value: v.to_string(),
                    });
                }
            }
        }
        let mut dead = Vec::new();
        for j in 0..ncols {
            let sum: BigRational = (0..rows).map(|i| data[i * ncols + j].clone()).sum();
            if sum.is_zero() {
                dead.push(j);
            } else if !sum.is_one() {
                return Err(MatrixError::ColumnSumNotOne { col: j, sum: sum.to_string() });
            }
        }
        Ok(Self { rows, ncols, data, dead })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.ncols + j]
    }

    /// 0-based positions of all-zero columns, ascending.
    pub fn dead_cols(&self) -> &[usize] {
        &self.dead
    }

    pub fn is_dead(&self, j: usize) -> bool {
        self.dead.binary_search(&j).is_ok()
    }
}
