use crate::quotient::{quotient, OutputPartition};
use fvn_assr::Assr;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Bisimulation,
    NotBisimulation,
}

/// Two states of one class whose one-step behaviour differs: under `input`,
/// exactly one of them can reach `successor_class`. All fields 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisimWitness {
    pub class: usize,
    pub state_a: usize,
    pub state_b: usize,
    pub input: usize,
    pub successor_class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisimReport {
    pub verdict: Verdict,
    pub witness: Option<BisimWitness>,
    pub original_deterministic: bool,
    pub quotient_deterministic: bool,
}

/// Decide whether the observation partition is a bisimulation: within every
/// class, all states must reach exactly the same set of successor classes
/// under every input. A state with no successor paired with one that moves
/// is a mismatch like any other.
///
/// The check is one-step against the fixed observation partition; it does
/// not refine the partition further.
pub fn check_bisimulation(assr: &Assr) -> BisimReport {
    let part = OutputPartition::from_h(&assr.h);
    let mut witness = None;

    'outer: for class in part.inhabited() {
        let members = part.members(class);
        for input in 1..=assr.m_inputs {
            let class_set = |s: usize| -> BTreeSet<usize> {
                assr.successors(s, input).iter().map(|&t| part.class_of(t)).collect()
            };
            let first = members[0];
            let reference = class_set(first);
            for &other in &members[1..] {
                let got = class_set(other);
                if got != reference {
                    let diff = reference
                        .symmetric_difference(&got)
                        .next()
                        .copied()
                        .expect("unequal sets differ somewhere");
                    witness = Some(BisimWitness {
                        class,
                        state_a: first,
                        state_b: other,
                        input,
                        successor_class: diff,
                    });
                    break 'outer;
                }
            }
        }
    }

    BisimReport {
        verdict: if witness.is_none() { Verdict::Bisimulation } else { Verdict::NotBisimulation },
        witness,
        original_deterministic: assr.is_deterministic(),
        quotient_deterministic: quotient(assr).is_deterministic(),
    }
}
