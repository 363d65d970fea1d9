//! Quotients, bisimulation, and output languages of compiled systems.
//!
//! The observation matrix `H` of an [`Assr`] partitions states into classes
//! (one per observation). [`quotient`] collapses the system onto those
//! classes; the result simulates the original by construction. Whether it is
//! a *bisimulation* - no class mixes states with distinguishable one-step
//! behaviour - is decided by [`check_bisimulation`], and the behavioural
//! meaning of that verdict is made concrete by [`output_language`] and
//! [`check_language_relation`]: the quotient's language always includes the
//! original's, and equals it exactly in the bisimulation case.

mod bisim;
mod language;
mod quotient;

pub use bisim::{check_bisimulation, BisimReport, BisimWitness, Verdict};
pub use language::{
    check_language_relation, output_language, prefix_closure, step, ClassRelation,
    LanguageReport, OutputWord, Trace,
};
pub use quotient::{is_deterministic, quotient, quotient_by_definition, OutputPartition};
