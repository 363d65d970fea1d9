//! Algebraic state-space form (ASSR) of finite-valued systems.
//!
//! A network over n k-valued nodes with m controls becomes one transition
//! matrix `L` with `k^n` rows and `k^(m+n)` columns: writing states and
//! controls as unit vectors, the dynamics collapse to
//!
//! ```text
//! x(t+1) = L * u(t) * x(t)        (semi-tensor products)
//! y(t)   = H * x(t)
//! ```
//!
//! Column `(j-1) * k^n + i` of `L` holds the successor of state `i` under
//! control `j`; the composite indices enumerate node values first node most
//! significant. Deterministic systems get a [`LogicalMatrix`] `L`,
//! nondeterministic or partial ones a [`BooleanMatrix`] whose columns are
//! successor sets (an all-zero column is a dead end).
//!
//! [`compile_network`] builds the ASSR of a parsed network,
//! [`compile_expr`]/[`compile_expr_algebraic`] compile single expressions
//! (the latter by composing structure matrices, as a cross-check of the
//! former), and [`compile_raw_ts`] turns an explicit transition system into
//! the same shape without any k^n structure.

mod compile;
mod raw;
mod structure;

pub use compile::{compile_expr, compile_expr_algebraic, compile_network, compile_network_capped};
pub use raw::compile_raw_ts;
pub use structure::{operator_structure_matrix, Connective};

use fvn_stp::{BooleanMatrix, LogicalMatrix, MatrixError};
use thiserror::Error;

/// Default ceiling on transition-matrix columns (`k^(m+n)`); compiles above
/// it are refused so a typo in a large model fails fast instead of thrashing.
pub const DEFAULT_MAX_COLS: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("state space needs {cols} transition columns, above the cap of {cap}")]
    TooLarge { cols: usize, cap: usize },
    #[error("expression mentions `{name}`, which is not a compile variable")]
    UnknownVariable { name: String },
    #[error("output `{output}` reads control `{control}`; outputs may only read state nodes")]
    ControlInOutput { output: String, control: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Transition matrix of an ASSR: logical when every (state, input) pair has
/// exactly one successor, boolean otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trans {
    Logical(LogicalMatrix),
    Boolean(BooleanMatrix),
}

impl Trans {
    pub fn rows(&self) -> usize {
        match self {
            Trans::Logical(m) => m.rows(),
            Trans::Boolean(m) => m.rows(),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            Trans::Logical(m) => m.ncols(),
            Trans::Boolean(m) => m.ncols(),
        }
    }

    pub fn is_logical(&self) -> bool {
        matches!(self, Trans::Logical(_))
    }

    /// Boolean view, cloning logical columns into singleton sets.
    pub fn to_boolean(&self) -> BooleanMatrix {
        match self {
            Trans::Logical(m) => m.to_boolean(),
            Trans::Boolean(m) => m.clone(),
        }
    }

    /// 1-based successor indices in column `j` (0-based position).
    pub fn col_successors(&self, j: usize) -> Vec<usize> {
        match self {
            Trans::Logical(m) => vec![m.col(j)],
            Trans::Boolean(m) => m.col_ones(j),
        }
    }
}

/// A compiled system: `l` is `n_states x (m_inputs * n_states)`, `h` is
/// `p_obs x n_states`. `m_inputs` is the full input alphabet (1 when
/// autonomous), not a variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assr {
    pub n_states: usize,
    pub m_inputs: usize,
    pub p_obs: usize,
    pub l: Trans,
    pub h: LogicalMatrix,
}

impl Assr {
    pub fn new(
        n_states: usize,
        m_inputs: usize,
        p_obs: usize,
        l: Trans,
        h: LogicalMatrix,
    ) -> Result<Self, MatrixError> {
        let want_cols = m_inputs * n_states;
        if l.rows() != n_states || l.ncols() != want_cols {
            return Err(MatrixError::DimensionMismatch {
                left_rows: l.rows(),
                left_cols: l.ncols(),
                right_rows: n_states,
                right_cols: want_cols,
            });
        }
        if h.rows() != p_obs || h.ncols() != n_states {
            return Err(MatrixError::DimensionMismatch {
                left_rows: h.rows(),
                left_cols: h.ncols(),
                right_rows: p_obs,
                right_cols: n_states,
            });
        }
        Ok(Self { n_states, m_inputs, p_obs, l, h })
    }

    /// 0-based column position of `(state, input)`, both 1-based.
    pub fn col_index(&self, state: usize, input: usize) -> usize {
        debug_assert!((1..=self.n_states).contains(&state));
        debug_assert!((1..=self.m_inputs).contains(&input));
        (input - 1) * self.n_states + state - 1
    }

    /// 1-based successors of `state` under `input`.
    pub fn successors(&self, state: usize, input: usize) -> Vec<usize> {
        self.l.col_successors(self.col_index(state, input))
    }

    /// 1-based observation of a state.
    pub fn obs_of(&self, state: usize) -> usize {
        self.h.col(state - 1)
    }

    /// True when every (state, input) pair has exactly one successor.
    pub fn is_deterministic(&self) -> bool {
        match &self.l {
            Trans::Logical(_) => true,
            Trans::Boolean(m) => (0..m.ncols()).all(|j| m.col_count(j) == 1),
        }
    }
}
