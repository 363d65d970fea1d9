//! Block-by-block reduction of large finite-valued networks.
//!
//! Compiling an n-node network takes k^(m+n) transition columns, which is
//! hopeless for large n. The workaround implemented here: carve the network
//! into blocks, compile each block as a small controlled network whose
//! outside dependencies become extra controls, quotient each block down to
//! its declared output nodes, and wire the quotients back together into an
//! aggregated system. The aggregate over-approximates the original and
//! reproduces it exactly wherever the block quotients are deterministic.
//!
//! [`block_io`] derives a block's boundary, [`extract_block`] materializes a
//! block as a standalone network, [`block_simulation`] computes its quotient
//! in counting, boolean and probabilistic form, [`assemble_aggregated`]
//! resolves the wiring, and [`simulate_nondet`] / [`simulate_prob`] run the
//! assembled system.

mod assemble;
mod block;
mod extract;
mod quotient;
mod simulate;

pub use assemble::{
    assemble_aggregated, assemble_aggregated_capped, AggregatedBlock, AggregatedNetwork,
    OutputBinding, ResidualNode, Source,
};
pub use block::{block_io, is_aggregateable, is_output_decoupled, member_indices, BlockIo};
pub use extract::{extract_block, Extracted};
pub use quotient::{
    block_count_matrix, block_simulation, realization_probability, sample_realization,
    BlockQuotient,
};
pub use simulate::{simulate_nondet, simulate_prob, AggState, NondetRun};

use fvn_assr::CompileError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AggregationError {
    #[error("blocks `{first}` and `{second}` overlap at node `{node}`")]
    OverlappingBlocks { node: String, first: String, second: String },
    #[error("`{consumer}` reads `{node}`, which block `{block}` does not declare as an output")]
    UnresolvableInput { consumer: String, node: String, block: String },
    #[error("system output `{output}` reads `{name}`, which no block output or residual node provides")]
    UnboundOutput { output: String, name: String },
    #[error("system output `{output}` is not a single node reference")]
    CompoundOutput { output: String },
    #[error("column {col} has no transitions, so its probabilities are undefined")]
    DeadColumn { col: usize },
    #[error("{what} {got} is out of range 1..={max}")]
    OutOfRange { what: &'static str, got: usize, max: usize },
    #[error(transparent)]
    Compile(#[from] CompileError),
}
