use crate::assemble::{AggregatedNetwork, Source};
use crate::quotient::sample_column;
use crate::AggregationError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// State of an aggregated network: one 1-based class per block (block
/// order) plus one 1-based level per residual node (residual order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AggState {
    pub classes: Vec<usize>,
    pub residual: Vec<usize>,
}

/// Every output word a nondeterministic run can produce. A word is one
/// output tuple per time step, starting with the initial observation, so a
/// run over h inputs yields words of h+1 tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondetRun {
    /// Sorted and deduplicated.
    pub words: Vec<Vec<Vec<usize>>>,
    /// The branch set hit the cap and was truncated; `words` is then only a
    /// subset of the full set.
    pub capped: bool,
}

/// Walk every branch of the aggregated system: each step, each block may
/// move to any class its boolean quotient column allows, while residual
/// nodes update deterministically. `inputs` holds one composite control
/// index per step; `cap` bounds the number of live (word, state) branches.
pub fn simulate_nondet(
    agg: &AggregatedNetwork,
    inputs: &[usize],
    init: &AggState,
    cap: usize,
) -> Result<NondetRun, AggregationError> {
    validate(agg, inputs, init)?;
    assert!(cap > 0, "branch cap must be positive");
    let mut frontier: BTreeSet<(Vec<Vec<usize>>, AggState)> = BTreeSet::new();
    frontier.insert((vec![outputs_at(agg, init)], init.clone()));
    let mut capped = false;
    for &input in inputs {
        let digits = control_digits(agg, input);
        let mut next = BTreeSet::new();
        for (word, st) in &frontier {
            let choices: Vec<Vec<usize>> = agg
                .blocks
                .iter()
                .enumerate()
                .map(|(b, block)| {
                    block.quotient.boolean_sim.col_ones(block_col(agg, b, &digits, st))
                })
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                // dead branch; nothing to extend
                continue;
            }
            let residual = residual_next(agg, &digits, st);
            let mut pick = vec![0usize; choices.len()];
            loop {
                let classes = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
                let st2 = AggState { classes, residual: residual.clone() };
                let obs2 = outputs_at(agg, &st2);
                // keep the set at the cap while it is built, so a step never
                // materializes more than cap + 1 branches
                let mut skip = false;
                if next.len() >= cap {
                    let worst = next.iter().next_back().expect("nonempty");
                    match cand_cmp(word, &obs2, &st2, worst) {
                        Ordering::Less => {}
                        Ordering::Equal => skip = true,
                        Ordering::Greater => {
                            capped = true;
                            skip = true;
                        }
                    }
                }
                if !skip {
                    let mut w2 = word.clone();
                    w2.push(obs2);
                    if next.insert((w2, st2)) && next.len() > cap {
                        let worst = next.iter().next_back().cloned().expect("nonempty");
                        next.remove(&worst);
                        capped = true;
                    }
                }
                if !bump(&mut pick, &choices) {
                    break;
                }
            }
        }
        frontier = next;
    }
    let words: BTreeSet<Vec<Vec<usize>>> = frontier.into_iter().map(|(w, _)| w).collect();
    Ok(NondetRun { words: words.into_iter().collect(), capped })
}

/// Sample one trajectory of the aggregated system: each step, each block
/// draws its next class from its counting quotient column (in block order),
/// residual nodes update deterministically. Equal seeds reproduce the run.
pub fn simulate_prob(
    agg: &AggregatedNetwork,
    inputs: &[usize],
    init: &AggState,
    seed: u64,
) -> Result<Vec<Vec<usize>>, AggregationError> {
    validate(agg, inputs, init)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut st = init.clone();
    let mut word = vec![outputs_at(agg, &st)];
    for &input in inputs {
        let digits = control_digits(agg, input);
        let mut classes = Vec::with_capacity(agg.blocks.len());
        for (b, block) in agg.blocks.iter().enumerate() {
            let col = block_col(agg, b, &digits, &st);
            classes.push(sample_column(&block.quotient.count, col, &mut rng)?);
        }
        let residual = residual_next(agg, &digits, &st);
        st = AggState { classes, residual };
        word.push(outputs_at(agg, &st));
    }
    Ok(word)
}

fn validate(
    agg: &AggregatedNetwork,
    inputs: &[usize],
    init: &AggState,
) -> Result<(), AggregationError> {
    let max_input = agg.k.pow(agg.controls.len() as u32);
    for &u in inputs {
        if u == 0 || u > max_input {
            return Err(AggregationError::OutOfRange { what: "input", got: u, max: max_input });
        }
    }
    assert_eq!(init.classes.len(), agg.blocks.len(), "one class per block");
    assert_eq!(init.residual.len(), agg.residual.len(), "one level per residual node");
    for (c, block) in init.classes.iter().zip(&agg.blocks) {
        let max = block.n_classes(agg.k);
        if *c == 0 || *c > max {
            return Err(AggregationError::OutOfRange { what: "class", got: *c, max });
        }
    }
    for &v in &init.residual {
        if v == 0 || v > agg.k {
            return Err(AggregationError::OutOfRange { what: "node level", got: v, max: agg.k });
        }
    }
    Ok(())
}

/// Per-control 1-based digits of a composite input index, first control most
/// significant.
fn control_digits(agg: &AggregatedNetwork, input: usize) -> Vec<usize> {
    let m = agg.controls.len();
    let mut digits = vec![1usize; m];
    let mut rem = input - 1;
    for d in digits.iter_mut().rev() {
        *d = rem % agg.k + 1;
        rem /= agg.k;
    }
    digits
}

/// Read the current 1-based level behind a source.
fn read(agg: &AggregatedNetwork, src: &Source, digits: &[usize], st: &AggState) -> usize {
    match *src {
        Source::Control(j) => digits[j],
        Source::Residual(p) => st.residual[p],
        Source::BlockOutput { block, digit } => {
            let beta = agg.blocks[block].declared.len();
            let c = st.classes[block] - 1;
            c / agg.k.pow((beta - 1 - digit) as u32) % agg.k + 1
        }
    }
}

/// Column of block `b`'s quotient selected by the current controls, wired
/// inputs and class, 0-based.
fn block_col(agg: &AggregatedNetwork, b: usize, digits: &[usize], st: &AggState) -> usize {
    let block = &agg.blocks[b];
    let mut comp = 0usize;
    for &cj in &block.controls {
        comp = comp * agg.k + (digits[cj] - 1);
    }
    for wire in &block.wires {
        comp = comp * agg.k + (read(agg, wire, digits, st) - 1);
    }
    comp * block.n_classes(agg.k) + (st.classes[b] - 1)
}

fn residual_next(agg: &AggregatedNetwork, digits: &[usize], st: &AggState) -> Vec<usize> {
    let lookup = |name: &str| {
        let src = agg
            .source_of_name(name)
            .expect("assembly resolved every residual dependency");
        read(agg, &src, digits, st)
    };
    agg.residual.iter().map(|r| r.update.eval(agg.k, &lookup)).collect()
}

/// Evaluate the output bindings at a state. Outputs never read controls, so
/// no control digits are needed.
fn outputs_at(agg: &AggregatedNetwork, st: &AggState) -> Vec<usize> {
    agg.outputs.iter().map(|o| read(agg, &o.source, &[], st)).collect()
}

/// Order of the candidate branch `(word ++ [obs], st)` relative to an
/// existing `(word', st')` of the same length, without building the
/// concatenation.
fn cand_cmp(
    word: &[Vec<usize>],
    obs: &[usize],
    st: &AggState,
    other: &(Vec<Vec<usize>>, AggState),
) -> Ordering {
    debug_assert_eq!(other.0.len(), word.len() + 1);
    for (a, b) in word.iter().zip(&other.0) {
        match a.cmp(b) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    match obs.cmp(&other.0[word.len()][..]) {
        Ordering::Equal => {}
        o => return o,
    }
    st.cmp(&other.1)
}

/// Odometer increment over mixed radices; false when it wraps to all zeros.
fn bump(pick: &mut [usize], choices: &[Vec<usize>]) -> bool {
    for i in (0..pick.len()).rev() {
        pick[i] += 1;
        if pick[i] < choices[i].len() {
            return true;
        }
        pick[i] = 0;
    }
    false
}
