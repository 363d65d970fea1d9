use fvn_netdsl::{Block, Network, NetworkGraph, Vertex};
use std::collections::BTreeSet;

/// Boundary of a block: what its members read from the rest of the system
/// and which members the rest of the system reads back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockIo {
    /// Outside nodes some member update reads, ascending node index.
    pub inputs: Vec<usize>,
    /// Members read by an outside node update or by a declared system
    /// output, ascending node index.
    pub outputs: Vec<usize>,
    /// System controls some member update reads, ascending control index.
    /// Controls stay controls under aggregation; they are never wired.
    pub controls: Vec<usize>,
}

/// 0-based node indices of a block's members, ascending.
///
/// Panics when the block names a node the network does not have; parsed
/// networks are validated, so this fires only on hand-built blocks.
pub fn member_indices(net: &Network, block: &Block) -> Vec<usize> {
    let mut ids: Vec<usize> = block
        .members
        .iter()
        .map(|m| {
            net.node_index(m)
                .unwrap_or_else(|| panic!("block `{}` names unknown node `{m}`", block.name))
        })
        .collect();
    ids.sort_unstable();
    ids
}

/// Derive the boundary of the block with the given member node indices.
pub fn block_io(graph: &NetworkGraph, members: &[usize]) -> BlockIo {
    let inside: BTreeSet<usize> = members.iter().copied().collect();
    let mut inputs = BTreeSet::new();
    let mut controls = BTreeSet::new();
    let mut outputs = BTreeSet::new();
    for &i in members {
        for dep in graph.node_deps(i) {
            match dep {
                Vertex::Node(j) if !inside.contains(j) => {
                    inputs.insert(*j);
                }
                Vertex::Control(j) => {
                    controls.insert(*j);
                }
                _ => {}
            }
        }
        for consumer in graph.node_consumers(i) {
            match consumer {
                Vertex::Node(j) if !inside.contains(j) => {
                    outputs.insert(i);
                }
                Vertex::Output(_) => {
                    outputs.insert(i);
                }
                _ => {}
            }
        }
    }
    BlockIo {
        inputs: inputs.into_iter().collect(),
        outputs: outputs.into_iter().collect(),
        controls: controls.into_iter().collect(),
    }
}

/// Edges running directly from a block input to a block output, i.e. the
/// pairs `(input, output)` where the output node's update reads the input.
/// The quotient of such a block cannot decouple its outputs from its inputs.
pub(crate) fn shortcut_edges(graph: &NetworkGraph, members: &[usize]) -> Vec<(usize, usize)> {
    let io = block_io(graph, members);
    let inputs: BTreeSet<usize> = io.inputs.iter().copied().collect();
    let mut edges = Vec::new();
    for &w in &io.outputs {
        for dep in graph.node_deps(w) {
            if let Vertex::Node(v) = dep {
                if inputs.contains(v) {
                    edges.push((*v, w));
                }
            }
        }
    }
    edges
}

/// A block aggregates cleanly when no update of one of its output nodes
/// reads one of its input nodes.
pub fn is_aggregateable(graph: &NetworkGraph, members: &[usize]) -> bool {
    shortcut_edges(graph, members).is_empty()
}

/// True when every member some system output reads is among the block's
/// declared outputs, so the observations survive the block's replacement.
pub fn is_output_decoupled(net: &Network, block: &Block) -> bool {
    let members: BTreeSet<usize> = member_indices(net, block).into_iter().collect();
    let declared: BTreeSet<usize> =
        block.outputs.iter().filter_map(|o| net.node_index(o)).collect();
    net.outputs.iter().all(|out| {
        out.expr.var_set().iter().all(|v| match net.node_index(v) {
            Some(i) if members.contains(&i) => declared.contains(&i),
            _ => true,
        })
    })
}
