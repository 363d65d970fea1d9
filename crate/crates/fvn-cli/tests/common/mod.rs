use fvn_assr::{Assr, Trans};
use fvn_netdsl::{parse_network, parse_transition_system, Network, TransitionSystem};
use fvn_stp::{BooleanMatrix, LogicalMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fs;

fn fixture_src(name: &str) -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/");
    fs::read_to_string(format!("{path}{name}")).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_net(name: &str) -> Network {
    parse_network(&fixture_src(name)).unwrap()
}

pub fn fixture_ts(name: &str) -> TransitionSystem {
    parse_transition_system(&fixture_src(name)).unwrap()
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

/// Output word of the full network under a composite input word, initial
/// observation included.
pub fn full_word(net: &Network, init: &[usize], inputs: &[usize]) -> Vec<Vec<usize>> {
    let m = net.controls.len();
    let mut state = init.to_vec();
    let mut word = vec![net.eval_outputs(&state, &vec![1; m])];
    for &u in inputs {
        let ctrl = fvn_stp::mix_decode(u, net.k, m);
        state = net.step(&state, &ctrl);
        word.push(net.eval_outputs(&state, &ctrl));
    }
    word
}
