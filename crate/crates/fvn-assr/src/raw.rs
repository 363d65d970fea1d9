use crate::{Assr, Trans};
use fvn_netdsl::TransitionSystem;
use fvn_stp::{BooleanMatrix, LogicalMatrix};

/// Turn an explicit transition system into ASSR shape. States keep their
/// declaration order (state i is unit vector `delta_n^i`), inputs likewise,
/// and the column layout is the usual `(input-1)*n + state`. The transition
/// matrix is promoted to logical exactly when every column holds one
/// successor; empty successor sets stay as zero columns of a boolean matrix.
pub fn compile_raw_ts(ts: &TransitionSystem) -> Assr {
    let n = ts.n_states();
    let m = ts.n_input_slots();
    let p = ts.obs.len();

    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(m * n);
    for u in 0..m {
        for s in 0..n {
            sets.push(ts.trans[u][s].iter().map(|&t| t + 1).collect());
        }
    }
    let b = BooleanMatrix::from_col_sets(n, &sets).expect("validated states are in range");
    let l = match b.to_logical() {
        Some(lm) => Trans::Logical(lm),
        None => Trans::Boolean(b),
    };
    let h = LogicalMatrix::new(p, ts.labels.iter().map(|&o| o + 1).collect())
        .expect("validated labels are in range");
    Assr::new(n, m, p, l, h).expect("dimensions agree by construction")
}
