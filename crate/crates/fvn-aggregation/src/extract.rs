use crate::block::{block_io, member_indices, shortcut_edges, BlockIo};
use fvn_netdsl::{Block, Expr, Network, NetworkGraph, Node, Output};

/// A block cut out of its network and stood up as a network of its own.
#[derive(Debug, Clone)]
pub struct Extracted {
    pub network: Network,
    pub io: BlockIo,
    /// Original 0-based node indices of the members, ascending; parallel to
    /// `network.nodes`.
    pub members: Vec<usize>,
    /// One warning per shortcut edge from a block input to a block output.
    pub warnings: Vec<String>,
}

/// Materialize a block as a standalone controlled network.
///
/// The members become the state nodes (ascending original order, original
/// update rules and names). The controls are the system controls the block
/// reads, in declaration order, followed by the outside nodes it reads,
/// ascending: outside values turn into free inputs. The declared block
/// outputs become the network outputs, in declaration order, named `o1`,
/// `o2`, ... so the printed form stays parseable.
///
/// Blocks with shortcut edges still extract; each such edge is reported as a
/// warning because the resulting quotient ties its outputs to its inputs.
pub fn extract_block(net: &Network, block: &Block) -> Extracted {
    let graph = NetworkGraph::build(net);
    let members = member_indices(net, block);
    let io = block_io(&graph, &members);

    let mut controls: Vec<String> =
        io.controls.iter().map(|&j| net.controls[j].clone()).collect();
    controls.extend(io.inputs.iter().map(|&i| net.nodes[i].name.clone()));

    let nodes: Vec<Node> = members.iter().map(|&i| net.nodes[i].clone()).collect();

    let outputs: Vec<Output> = block
        .outputs
        .iter()
        .enumerate()
        .map(|(p, name)| Output { name: format!("o{}", p + 1), expr: Expr::var(name) })
        .collect();

    let warnings: Vec<String> = shortcut_edges(&graph, &members)
        .into_iter()
        .map(|(v, w)| {
            format!(
                "block `{}`: block input `{}` feeds block output `{}` directly",
                block.name, net.nodes[v].name, net.nodes[w].name
            )
        })
        .collect();

    let network = Network {
        name: block.name.clone(),
        k: net.k,
        controls,
        nodes,
        outputs,
        blocks: Vec::new(),
    };

    // every variable a member update reads must now resolve inside the cut
    debug_assert!(network.nodes.iter().all(|n| {
        n.update
            .var_set()
            .iter()
            .all(|v| network.node_index(v).is_some() || network.control_index(v).is_some())
    }));

    Extracted { network, io, members, warnings }
}
