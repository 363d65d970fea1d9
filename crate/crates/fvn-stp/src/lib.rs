//! Exact matrix algebra for finite-valued networks.
//!
//! Four matrix representations cover the pipeline from compiled dynamics to
//! probabilistic summaries:
//!
//! * [`LogicalMatrix`] - every column is a canonical unit vector, stored as one
//!   1-based row index per column. Deterministic dynamics live here.
//! * [`BooleanMatrix`] - 0/1 entries stored as column bitsets. Nondeterministic
//!   transitions and simulation relations live here.
//! * [`CountMatrix`] - dense unsigned integers. Products accumulate exact
//!   multiplicities instead of saturating at 1.
//! * [`StochasticMatrix`] - exact rationals, produced by normalizing the
//!   columns of a count matrix.
//!
//! Matrix positions (row/column arguments) are 0-based. Stored column data of
//! logical and boolean matrices are 1-based row indices, matching the
//! delta-vector convention `delta_n^i` used throughout; the JSON interchange
//! format keeps the 1-based form.

mod boolean;
mod count;
mod json;
mod logical;
mod stochastic;

pub use boolean::BooleanMatrix;
pub use count::CountMatrix;
pub use json::MatrixJson;
pub use logical::LogicalMatrix;
pub use stochastic::StochasticMatrix;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("column {col} holds row index {index}, outside 1..={rows}")]
    IndexOutOfRange { col: usize, index: usize, rows: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("data length {len} does not fill {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("matrix has a zero dimension")]
    EmptyDimension,
    #[error("column {col} is not a unit vector")]
    NotUnitColumn { col: usize },
    #[error("column {col} sums to {sum}, expected 1 (or list it as dead)")]
    ColumnSumNotOne { col: usize, sum: String },
    #[error("entry ({row},{col}) = {value} is not a valid probability")]
    BadProbability { row: usize, col: usize, value: String },
    #[error("count arithmetic overflowed at column {col}")]
    Overflow { col: usize },
    #[error("expected a {expected} matrix, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}

/// Least common multiple of two positive integers.
pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Composite delta index of a tuple of k-valued factors, first factor most
/// significant. Both the entries of `vals` and the result are 1-based.
pub fn mix_index(vals: &[usize], k: usize) -> usize {
    let mut idx = 1usize;
    for &v in vals {
        debug_assert!((1..=k).contains(&v));
        idx = (idx - 1) * k + v;
    }
    idx
}

/// Composite delta index over factors with individual radices.
pub fn mix_radix_index(vals: &[usize], radices: &[usize]) -> usize {
    debug_assert_eq!(vals.len(), radices.len());
    let mut idx = 1usize;
    for (&v, &r) in vals.iter().zip(radices) {
        debug_assert!((1..=r).contains(&v));
        idx = (idx - 1) * r + v;
    }
    idx
}

/// Inverse of [`mix_index`]: split a 1-based composite index into `n` factors.
pub fn mix_decode(idx: usize, k: usize, n: usize) -> Vec<usize> {
    let mut rem = idx - 1;
    let mut out = vec![1usize; n];
    for slot in out.iter_mut().rev() {
        *slot = rem % k + 1;
        rem /= k;
    }
    debug_assert_eq!(rem, 0, "index {idx} exceeds {k}^{n}");
    out
}

/// Inverse of [`mix_radix_index`].
pub fn mix_radix_decode(idx: usize, radices: &[usize]) -> Vec<usize> {
    let mut rem = idx - 1;
    let mut out = vec![1usize; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = rem % r + 1;
        rem /= r;
    }
    debug_assert_eq!(rem, 0);
    out
}

/// Swap matrix `W_[m,n]`: maps the composite index of `x (x) y` with
/// `x` m-valued, `y` n-valued to the composite index of `y (x) x`.
pub fn swap_matrix(m: usize, n: usize) -> LogicalMatrix {
    let mut cols = Vec::with_capacity(m * n);
    for ix in 0..m {
        for iy in 0..n {
            cols.push(iy * m + ix + 1);
        }
    }
    LogicalMatrix::new(m * n, cols).expect("swap matrix indices are in range")
}

/// Power-reducing matrix `PR_k`: column `i` is the unit vector at the
/// composite index of `(i, i)`, so `PR_k x = x (x) x` for any `x` in
/// `Delta_k`.
pub fn power_reducing_matrix(k: usize) -> LogicalMatrix {
    let cols = (1..=k).map(|i| (i - 1) * k + i).collect();
    LogicalMatrix::new(k * k, cols).expect("power-reducing indices are in range")
}
