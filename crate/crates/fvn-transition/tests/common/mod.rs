// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use fvn_assr::{compile_raw_ts, Assr, Trans};
use fvn_netdsl::parse_transition_system;
use fvn_stp::{BooleanMatrix, LogicalMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fs;

pub fn fixture_assr(name: &str) -> Assr {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/");
    let src = fs::read_to_string(format!("{path}{name}")).unwrap_or_else(|e| panic!("{name}: {e}"));
    compile_raw_ts(&parse_transition_system(&src).unwrap())
}

/// Arbitrary system: random successor sets (possibly empty), random labels.
pub fn random_system(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize, p_max: usize) -> Assr {
    let n = rng.gen_range(2..=n_max);
    let m = rng.gen_range(1..=m_max);
    let p = rng.gen_range(1..=p_max.min(n));
    let mut l = BooleanMatrix::zeros(n, m * n);
    for j in 0..m * n {
        for i in 0..n {
            if rng.gen_bool(0.3) {
                l.set(i, j, true);
            }
        }
    }
    let h_cols: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=p)).collect();
    let h = LogicalMatrix::new(p, h_cols).unwrap();
    Assr::new(n, m, p, Trans::Boolean(l), h).unwrap()
}

/// Total system whose classes move in lockstep: every class has a single
/// target class per input, and members only ever step into that target.
/// By construction the observation partition is a bisimulation and the
/// quotient is deterministic.
pub fn random_lockstep_system(
    rng: &mut ChaCha8Rng,
    n_max: usize,
    m_max: usize,
    p_max: usize,
) -> Assr {
    let p = rng.gen_range(1..=p_max);
    let n = rng.gen_range(p..=n_max.max(p));
    let m = rng.gen_range(1..=m_max);

    // surjective class map: one member per class first, the rest random
    let mut class_of = Vec::with_capacity(n);
    for i in 0..n {
        class_of.push(if i < p { i + 1 } else { rng.gen_range(1..=p) });
    }
    let mut members = vec![Vec::new(); p + 1];
    for (i, &c) in class_of.iter().enumerate() {
        members[c].push(i + 1);
    }

    let mut l = BooleanMatrix::zeros(n, m * n);
    for input in 1..=m {
        let targets: Vec<usize> = (1..=p).map(|_| rng.gen_range(1..=p)).collect();
        for s in 1..=n {
            let target = targets[class_of[s - 1] - 1];
            let pool = &members[target];
            // nonempty random subset of the target class
            let mut chosen: Vec<usize> = pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if chosen.is_empty() {
                chosen.push(pool[rng.gen_range(0..pool.len())]);
            }
            let col = (input - 1) * n + s - 1;
            for t in chosen {
                l.set(t - 1, col, true);
            }
        }
    }
    let h = LogicalMatrix::new(p, class_of).unwrap();
    Assr::new(n, m, p, Trans::Boolean(l), h).unwrap()
}
