mod common;

use common::{fixture_assr, random_lockstep_system, random_system};
use fvn_assr::compile_raw_ts;
use fvn_netdsl::parse_transition_system;
use fvn_transition::{
    check_bisimulation, check_language_relation, output_language, quotient, step, OutputWord,
    Trace, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(obs: &[usize], inputs: &[usize], truncated: bool) -> OutputWord {
    OutputWord { obs: obs.to_vec(), inputs: inputs.to_vec(), truncated }
}

fn trace(obs: &[usize], inputs: &[usize]) -> Trace {
    Trace { obs: obs.to_vec(), inputs: inputs.to_vec() }
}

#[test]
fn step_unions_successor_sets() {
    let assr = fixture_assr("four_state_partial.ts");
    assert_eq!(step(&assr, &[1, 2], 1), vec![2, 3]);
    assert_eq!(step(&assr, &[3], 1), Vec::<usize>::new());
    assert_eq!(step(&assr, &[2, 3], 2), vec![2, 3, 4]);
}

#[test]
fn cycle_system_has_one_word_per_branch() {
    let assr = fixture_assr("four_state_cycle.ts");
    // from state 4: 4 -> 2 -> 4, deterministic all the way
    assert_eq!(output_language(&assr, 4, 2), vec![word(&[3, 1, 3], &[1, 1], false)]);
    // from state 1 both branches show up
    assert_eq!(
        output_language(&assr, 1, 2),
        vec![word(&[1, 1, 3], &[1, 1], false), word(&[1, 2, 1], &[1, 1], false)]
    );
}

#[test]
fn quotient_grows_the_language_of_the_cycle_system() {
    let assr = fixture_assr("four_state_cycle.ts");
    let q = quotient(&assr);
    let from_class3 = output_language(&q, 3, 2);
    assert_eq!(
        from_class3,
        vec![
            word(&[3, 1, 1], &[1, 1], false),
            word(&[3, 1, 2], &[1, 1], false),
            word(&[3, 1, 3], &[1, 1], false),
        ]
    );

    let report = check_language_relation(&assr, 2);
    assert!(report.inclusion, "the quotient simulates the original");
    assert!(!report.equality);
    let class3 = report.classes.iter().find(|c| c.class == 3).unwrap();
    assert!(class3.unsimulated.is_empty());
    assert!(class3.unrealizable.contains(&trace(&[3, 1, 1], &[1, 1])));
    assert!(class3.unrealizable.contains(&trace(&[3, 1, 2], &[1, 1])));
}

#[test]
fn total_dead_ends_truncate_words_but_dead_inputs_do_not() {
    let src = "\
ts stall
states a b c
obs O1 O2 O3
inputs u1 u2
trans a u1 -> {b}
trans c u2 -> {c}
label a = O1
label b = O2
label c = O3
";
    let assr = compile_raw_ts(&parse_transition_system(src).unwrap());
    // b is dead under every input: the run stops early and says so
    assert_eq!(output_language(&assr, 1, 3), vec![word(&[1, 2], &[1], true)]);
    // c is dead under u1 only: no truncated word, just the u2 branch
    assert_eq!(output_language(&assr, 3, 2), vec![word(&[3, 3, 3], &[2, 2], false)]);
}

#[test]
fn fourteen_state_quotient_overapproximates_strictly() {
    let assr = fixture_assr("fourteen_state.ts");
    let report = check_language_relation(&assr, 2);
    assert!(report.inclusion);
    assert!(!report.equality);
    // class 1 under (u2, u1): only state 2 survives u2, landing in state 3,
    // which u1 sends to observation 4 - but the quotient also offers 1
    let class1 = report.classes.iter().find(|c| c.class == 1).unwrap();
    assert!(class1.unrealizable.contains(&trace(&[1, 1, 1], &[2, 1])));
    assert!(!class1.unrealizable.contains(&trace(&[1, 1, 4], &[2, 1])));
}

#[test]
fn quotients_always_include_the_original_language() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let assr = random_system(&mut rng, 10, 3, 4);
        let report = check_language_relation(&assr, 4);
        assert!(report.inclusion);
        for class in &report.classes {
            assert!(class.unsimulated.is_empty());
        }
    }
}

#[test]
fn bisimulating_systems_have_equal_languages() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let assr = random_lockstep_system(&mut rng, 10, 3, 4);
        assert_eq!(check_bisimulation(&assr).verdict, Verdict::Bisimulation);
        let report = check_language_relation(&assr, 4);
        assert!(report.equality);
    }
}

#[test]
fn horizon_zero_words_are_bare_observations() {
    let assr = fixture_assr("four_state_partial.ts");
    for s in 1..=4 {
        let obs = assr.obs_of(s);
        assert_eq!(output_language(&assr, s, 0), vec![word(&[obs], &[], false)]);
    }
}
