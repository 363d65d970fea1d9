mod common;

use common::{fixture_assr, random_system};
use fvn_stp::LogicalMatrix;
use fvn_transition::{quotient, quotient_by_definition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn four_state_quotient_collapses_to_three_classes() {
    let assr = fixture_assr("four_state_partial.ts");
    let q = quotient(&assr);
    assert_eq!((q.n_states, q.m_inputs, q.p_obs), (3, 2, 3));
    assert_eq!(q.h, LogicalMatrix::identity(3));

    // successor classes per (class, input)
    let by_input: [[&[usize]; 3]; 2] = [
        [&[2, 3], &[2, 3], &[]],
        [&[], &[2], &[2, 3]],
    ];
    for (u, row) in by_input.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            assert_eq!(q.successors(c + 1, u + 1), *want, "class {} input {}", c + 1, u + 1);
        }
    }
    assert!(!q.is_deterministic());
}

#[test]
fn fourteen_state_quotient_matches_its_printed_form() {
    let assr = fixture_assr("fourteen_state.ts");
    let q = quotient(&assr);
    assert_eq!((q.n_states, q.m_inputs, q.p_obs), (5, 2, 5));

    let by_input: [[&[usize]; 5]; 2] = [
        [&[1, 3, 4], &[2, 4, 5], &[3], &[], &[5]],
        [&[1], &[2, 4], &[4], &[3], &[5]],
    ];
    for (u, row) in by_input.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            assert_eq!(q.successors(c + 1, u + 1), *want, "class {} input {}", c + 1, u + 1);
        }
    }
}

#[test]
fn matrix_quotient_equals_definitional_quotient() {
    for name in ["four_state_partial.ts", "fourteen_state.ts", "four_state_cycle.ts"] {
        let assr = fixture_assr(name);
        assert_eq!(quotient(&assr), quotient_by_definition(&assr), "{name}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let assr = random_system(&mut rng, 16, 4, 4);
        assert_eq!(quotient(&assr), quotient_by_definition(&assr));
    }
}

#[test]
fn quotient_of_a_quotient_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..50 {
        let assr = random_system(&mut rng, 12, 3, 4);
        let q1 = quotient(&assr);
        let q2 = quotient(&q1);
        assert_eq!(q1, q2);
    }
}

#[test]
fn deterministic_quotients_promote_to_logical_form() {
    let assr = fixture_assr("four_state_cycle.ts");
    // classes: {x1,x2} -> {x4,x1} spans two classes, so this one stays boolean
    assert!(!quotient(&assr).l.is_logical());

    // two states per class moving in lockstep collapse to one unit per column
    let det = "\
ts lockstep
states a1 a2 b1 b2
obs A B
trans a1 -> {b1}
trans a2 -> {b2}
trans b1 -> {a1, a2}
trans b2 -> {a2}
label a1 = A
label a2 = A
label b1 = B
label b2 = B
";
    let assr = fvn_assr::compile_raw_ts(&fvn_netdsl::parse_transition_system(det).unwrap());
    let q = quotient(&assr);
    assert!(q.l.is_logical());
    assert_eq!(q.successors(1, 1), vec![2]);
    assert_eq!(q.successors(2, 1), vec![1]);
}
