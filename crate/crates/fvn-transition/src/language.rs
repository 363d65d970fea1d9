use crate::quotient::{quotient_by_definition, OutputPartition};
use fvn_assr::Assr;
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

/// One maximal run observed for `horizon` steps: the observation at the
/// start state followed by one observation per step, and the inputs that
/// drove the run. `truncated` marks runs that hit a total dead end (a state
/// with no successor under any input) before the horizon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OutputWord {
    pub obs: Vec<usize>,
    pub inputs: Vec<usize>,
    pub truncated: bool,
}

/// A finite observation/input trace, the currency of language comparison.
/// Prefix closures are sets of traces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Trace {
    pub obs: Vec<usize>,
    pub inputs: Vec<usize>,
}

/// Union of the successors of several states under one input, 1-based and
/// sorted.
pub fn step(assr: &Assr, states: &[usize], input: usize) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for &s in states {
        out.extend(assr.successors(s, input));
    }
    out.into_iter().collect()
}

/// Every maximal output word from `from` within `horizon` steps, sorted.
///
/// A word ends at the horizon, or earlier with `truncated` set when a run
/// reaches a state where every input has an empty successor set. An input
/// with no successors at a state that still has live inputs contributes no
/// words (that input sequence is simply not realizable).
pub fn output_language(assr: &Assr, from: usize, horizon: usize) -> Vec<OutputWord> {
    let mut memo = HashMap::new();
    let set = suffixes(assr, from, horizon, &mut memo);
    set.iter().cloned().collect()
}

fn suffixes(
    assr: &Assr,
    state: usize,
    depth: usize,
    memo: &mut HashMap<(usize, usize), Rc<BTreeSet<OutputWord>>>,
) -> Rc<BTreeSet<OutputWord>> {
    if let Some(hit) = memo.get(&(state, depth)) {
        return hit.clone();
    }
    let o = assr.obs_of(state);
    let mut out = BTreeSet::new();
    if depth == 0 {
        out.insert(OutputWord { obs: vec![o], inputs: Vec::new(), truncated: false });
    } else {
        let mut alive = false;
        for input in 1..=assr.m_inputs {
            let succs = assr.successors(state, input);
            if succs.is_empty() {
                continue;
            }
            alive = true;
            for t in succs {
                for w in suffixes(assr, t, depth - 1, memo).iter() {
                    let mut obs = Vec::with_capacity(w.obs.len() + 1);
                    obs.push(o);
                    obs.extend_from_slice(&w.obs);
                    let mut inputs = Vec::with_capacity(w.inputs.len() + 1);
                    inputs.push(input);
                    inputs.extend_from_slice(&w.inputs);
                    out.insert(OutputWord { obs, inputs, truncated: w.truncated });
                }
            }
        }
        if !alive {
            out.insert(OutputWord { obs: vec![o], inputs: Vec::new(), truncated: true });
        }
    }
    let rc = Rc::new(out);
    memo.insert((state, depth), rc.clone());
    rc
}

/// All traces that prefix some word in the set (including the words
/// themselves). Truncation flags play no role here: a truncated word
/// witnesses exactly its own prefixes.
pub fn prefix_closure(words: &[OutputWord]) -> BTreeSet<Trace> {
    let mut out = BTreeSet::new();
    for w in words {
        for q in 0..w.obs.len() {
            out.insert(Trace { obs: w.obs[..=q].to_vec(), inputs: w.inputs[..q].to_vec() });
        }
    }
    out
}

/// Per-class comparison of the original language against the quotient's,
/// both taken as prefix closures up to the horizon. `unsimulated` lists
/// traces only the original produces (inclusion failures), `unrealizable`
/// traces only the quotient produces, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRelation {
    pub class: usize,
    pub inclusion: bool,
    pub equality: bool,
    pub unsimulated: Vec<Trace>,
    pub unrealizable: Vec<Trace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageReport {
    pub horizon: usize,
    pub inclusion: bool,
    pub equality: bool,
    pub classes: Vec<ClassRelation>,
}

/// Compare the system's output language with its quotient's, class by
/// (inhabited) class: the words of a class are the union over its member
/// states. Inclusion of the original in the quotient holds for every system;
/// equality distinguishes exact abstractions from lossy ones.
pub fn check_language_relation(assr: &Assr, horizon: usize) -> LanguageReport {
    let part = OutputPartition::from_h(&assr.h);
    let quot = quotient_by_definition(assr);
    let mut classes = Vec::new();
    for class in part.inhabited() {
        let mut original: Vec<OutputWord> = Vec::new();
        for &s in part.members(class) {
            original.extend(output_language(assr, s, horizon));
        }
        let original = prefix_closure(&original);
        let quotient_words = output_language(&quot, class, horizon);
        let quotient_closure = prefix_closure(&quotient_words);

        let unsimulated: Vec<Trace> =
            original.difference(&quotient_closure).cloned().collect();
        let unrealizable: Vec<Trace> =
            quotient_closure.difference(&original).cloned().collect();
        classes.push(ClassRelation {
            class,
            inclusion: unsimulated.is_empty(),
            equality: unsimulated.is_empty() && unrealizable.is_empty(),
            unsimulated,
            unrealizable,
        });
    }
    LanguageReport {
        horizon,
        inclusion: classes.iter().all(|c| c.inclusion),
        equality: classes.iter().all(|c| c.equality),
        classes,
    }
}
