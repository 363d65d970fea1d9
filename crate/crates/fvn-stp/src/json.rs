use crate::{BooleanMatrix, CountMatrix, LogicalMatrix, MatrixError, StochasticMatrix};
use num::BigRational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Interchange form for every matrix kind. Logical and boolean columns carry
/// 1-based row indices; count and stochastic carry row-major entries under
/// `cols` (the column count is `cols.len() / rows`). Stochastic entries are
/// exact `"num/den"` strings and `dead` lists 1-based all-zero columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatrixJson {
    Logical {
        rows: usize,
        cols: Vec<usize>,
    },
    Boolean {
        rows: usize,
        cols: Vec<Vec<usize>>,
    },
    Count {
        rows: usize,
        cols: Vec<u64>,
    },
    Stochastic {
        rows: usize,
        cols: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        dead: Vec<usize>,
    },
}

impl From<&LogicalMatrix> for MatrixJson {
    fn from(m: &LogicalMatrix) -> Self {
        MatrixJson::Logical { rows: m.rows(), cols: m.entries().to_vec() }
    }
}

impl From<&BooleanMatrix> for MatrixJson {
    fn from(m: &BooleanMatrix) -> Self {
        MatrixJson::Boolean {
            rows: m.rows(),
            cols: (0..m.ncols()).map(|j| m.col_ones(j)).collect(),
        }
    }
}

impl From<&CountMatrix> for MatrixJson {
    fn from(m: &CountMatrix) -> Self {
        MatrixJson::Count { rows: m.rows(), cols: m.data().to_vec() }
    }
}

impl From<&StochasticMatrix> for MatrixJson {
    fn from(m: &StochasticMatrix) -> Self {
        let mut cols = Vec::with_capacity(m.rows() * m.ncols());
        for i in 0..m.rows() {
            for j in 0..m.ncols() {
                let v = m.get(i, j);
                cols.push(format!("{}/{}", v.numer(), v.denom()));
            }
        }
        MatrixJson::Stochastic {
            rows: m.rows(),
            cols,
            dead: m.dead_cols().iter().map(|&j| j + 1).collect(),
        }
    }
}

impl MatrixJson {
    pub fn kind(&self) -> &'static str {
        match self {
            MatrixJson::Logical { .. } => "logical",
            MatrixJson::Boolean { .. } => "boolean",
            MatrixJson::Count { .. } => "count",
            MatrixJson::Stochastic { .. } => "stochastic",
        }
    }
}

impl TryFrom<MatrixJson> for LogicalMatrix {
    type Error = MatrixError;
    fn try_from(j: MatrixJson) -> Result<Self, MatrixError> {
        match j {
            MatrixJson::Logical { rows, cols } => LogicalMatrix::new(rows, cols),
            other => Err(wrong_kind("logical", &other)),
        }
    }
}

impl TryFrom<MatrixJson> for BooleanMatrix {
    type Error = MatrixError;
    fn try_from(j: MatrixJson) -> Result<Self, MatrixError> {
        match j {
            MatrixJson::Boolean { rows, cols } => BooleanMatrix::from_col_sets(rows, &cols),
            MatrixJson::Logical { rows, cols } => {
                Ok(LogicalMatrix::new(rows, cols)?.to_boolean())
            }
            other => Err(wrong_kind("boolean", &other)),
        }
    }
}

impl TryFrom<MatrixJson> for CountMatrix {
    type Error = MatrixError;
    fn try_from(j: MatrixJson) -> Result<Self, MatrixError> {
        match j {
            MatrixJson::Count { rows, cols } => {
                if rows == 0 || cols.len() % rows != 0 {
                    return Err(MatrixError::ShapeMismatch {
                        rows,
                        cols: if rows == 0 { 0 } else { cols.len() / rows },
                        len: cols.len(),
                    });
                }
                let ncols = cols.len() / rows;
                CountMatrix::new(rows, ncols, cols)
            }
            other => Err(wrong_kind("count", &other)),
        }
    }
}

impl TryFrom<MatrixJson> for StochasticMatrix {
    type Error = MatrixError;
    fn try_from(j: MatrixJson) -> Result<Self, MatrixError> {
        match j {
            MatrixJson::Stochastic { rows, cols, dead: _ } => {
                if rows == 0 || cols.len() % rows != 0 {
                    return Err(MatrixError::ShapeMismatch {
                        rows,
                        cols: if rows == 0 { 0 } else { cols.len() / rows },
                        len: cols.len(),
                    });
                }
                let ncols = cols.len() / rows;
                let mut data = Vec::with_capacity(cols.len());
                for (pos, s) in cols.iter().enumerate() {
                    let v = BigRational::from_str(s).map_err(|_| MatrixError::BadProbability {
                        row: pos / ncols,
                        col: pos % ncols,
                        value: s.clone(),
                    })?;
                    data.push(v);
                }
                StochasticMatrix::new(rows, ncols, data)
            }
            other => Err(wrong_kind("stochastic", &other)),
        }
    }
}

fn wrong_kind(expected: &'static str, found: &MatrixJson) -> MatrixError {
    MatrixError::WrongKind { expected, found: found.kind() }
}
