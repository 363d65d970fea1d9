use crate::block::member_indices;
use crate::extract::extract_block;
use crate::quotient::{block_simulation, BlockQuotient};
use crate::simulate::AggState;
use crate::AggregationError;
use fvn_assr::{compile_network_capped, Assr, DEFAULT_MAX_COLS};
use fvn_netdsl::{Block, Expr, Network};
use std::collections::HashMap;
use std::fmt::Write;

/// Where a wired value is read from at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A system control, by position in [`AggregatedNetwork::controls`].
    Control(usize),
    /// A residual node, by position in [`AggregatedNetwork::residual`].
    Residual(usize),
    /// One digit of a block's class: `digit` indexes the block's declared
    /// outputs, first digit most significant.
    BlockOutput { block: usize, digit: usize },
}

/// One block of an aggregated network: its boundary, its wiring and its
/// quotient. All node lists carry original node names.
#[derive(Debug, Clone)]
pub struct AggregatedBlock {
    pub name: String,
    /// Member names, ascending original declaration order.
    pub members: Vec<String>,
    /// Declared output names, declaration order. These are the class digits,
    /// first digit most significant.
    pub declared: Vec<String>,
    /// Block input names, ascending original declaration order.
    pub inputs: Vec<String>,
    /// System controls the block reads, by position in
    /// [`AggregatedNetwork::controls`], ascending.
    pub controls: Vec<usize>,
    /// Source feeding each block input, parallel to `inputs`.
    pub wires: Vec<Source>,
    /// The compiled extracted block.
    pub assr: Assr,
    pub quotient: BlockQuotient,
}

impl AggregatedBlock {
    /// Number of classes of the block quotient.
    pub fn n_classes(&self, k: usize) -> usize {
        k.pow(self.declared.len() as u32)
    }
}

/// A declared system output and the aggregate value it reads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputBinding {
    pub name: String,
    pub source: Source,
}

/// A node belonging to no block. It keeps its original update rule, which
/// the aggregate evaluates pointwise each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualNode {
    pub name: String,
    pub update: Expr,
}

/// A network with every block replaced by its quotient. The state is one
/// class per block plus one value per residual node; the controls are the
/// original system controls.
#[derive(Debug, Clone)]
pub struct AggregatedNetwork {
    pub k: usize,
    pub controls: Vec<String>,
    pub blocks: Vec<AggregatedBlock>,
    pub residual: Vec<ResidualNode>,
    pub outputs: Vec<OutputBinding>,
    pub warnings: Vec<String>,
}

impl AggregatedNetwork {
    /// State nodes of the aggregate: one per declared block output plus one
    /// per residual node.
    pub fn n_state_nodes(&self) -> usize {
        self.blocks.iter().map(|b| b.declared.len()).sum::<usize>() + self.residual.len()
    }

    /// Wires between the aggregate's parts (block inputs only; controls are
    /// not wires).
    pub fn n_wires(&self) -> usize {
        self.blocks.iter().map(|b| b.wires.len()).sum()
    }

    /// The source holding the named value, if the aggregate exposes it.
    pub fn source_of_name(&self, name: &str) -> Option<Source> {
        if let Some(j) = self.controls.iter().position(|c| c == name) {
            return Some(Source::Control(j));
        }
        if let Some(p) = self.residual.iter().position(|r| r.name == name) {
            return Some(Source::Residual(p));
        }
        for (b, block) in self.blocks.iter().enumerate() {
            if let Some(digit) = block.declared.iter().position(|d| d == name) {
                return Some(Source::BlockOutput { block: b, digit });
            }
        }
        None
    }

    /// Map a full state of the source network (one 1-based level per node,
    /// original node order) onto the aggregate.
    pub fn project_state(&self, net: &Network, full: &[usize]) -> AggState {
        assert_eq!(full.len(), net.nodes.len());
        let value = |name: &str| {
            full[net.node_index(name).expect("name from the source network")]
        };
        let classes = self
            .blocks
            .iter()
            .map(|b| b.declared.iter().fold(1, |acc, name| (acc - 1) * self.k + value(name)))
            .collect();
        let residual = self.residual.iter().map(|r| value(&r.name)).collect();
        AggState { classes, residual }
    }

    /// Render the block diagram in DOT: blocks are boxes, controls diamonds,
    /// residual nodes ellipses, outputs plain labels; wires carry the name
    /// of the value they feed.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph aggregated {{");
        let _ = writeln!(s, "  rankdir=LR;");
        for (j, c) in self.controls.iter().enumerate() {
            let _ = writeln!(s, "  c{j} [label=\"{c}\", shape=diamond];");
        }
        for (b, block) in self.blocks.iter().enumerate() {
            let _ = writeln!(
                s,
                "  b{b} [label=\"{} | {}\", shape=box];",
                block.name,
                block.declared.join(", ")
            );
        }
        for (p, r) in self.residual.iter().enumerate() {
            let _ = writeln!(s, "  r{p} [label=\"{}\"];", r.name);
        }
        for (o, out) in self.outputs.iter().enumerate() {
            let _ = writeln!(s, "  y{o} [label=\"{}\", shape=plaintext];", out.name);
        }
        let id = |src: &Source| match *src {
            Source::Control(j) => format!("c{j}"),
            Source::Residual(p) => format!("r{p}"),
            Source::BlockOutput { block, .. } => format!("b{block}"),
        };
        for (b, block) in self.blocks.iter().enumerate() {
            for &cj in &block.controls {
                let _ = writeln!(s, "  c{cj} -> b{b};");
            }
            for (wire, input) in block.wires.iter().zip(&block.inputs) {
                let _ = writeln!(s, "  {} -> b{b} [label=\"{input}\"];", id(wire));
            }
        }
        for (p, r) in self.residual.iter().enumerate() {
            for v in r.update.var_set() {
                if let Some(src) = self.source_of_name(v) {
                    let _ = writeln!(s, "  {} -> r{p} [label=\"{v}\"];", id(&src));
                }
            }
        }
        for (o, out) in self.outputs.iter().enumerate() {
            let _ = writeln!(s, "  {} -> y{o};", id(&out.source));
        }
        s.push_str("}\n");
        s
    }
}

/// Replace every given block of `net` by its quotient and resolve the wiring
/// between the pieces, with the default per-block compile cap.
pub fn assemble_aggregated(
    net: &Network,
    blocks: &[Block],
) -> Result<AggregatedNetwork, AggregationError> {
    assemble_aggregated_capped(net, blocks, DEFAULT_MAX_COLS)
}

/// [`assemble_aggregated`] with an explicit per-block compile cap.
pub fn assemble_aggregated_capped(
    net: &Network,
    blocks: &[Block],
    max_cols: usize,
) -> Result<AggregatedNetwork, AggregationError> {
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (b, block) in blocks.iter().enumerate() {
        for i in member_indices(net, block) {
            if let Some(&prev) = owner.get(&i) {
                return Err(AggregationError::OverlappingBlocks {
                    node: net.nodes[i].name.clone(),
                    first: blocks[prev].name.clone(),
                    second: block.name.clone(),
                });
            }
            owner.insert(i, b);
        }
    }

    let mut warnings = Vec::new();
    let mut built = Vec::new();
    for block in blocks {
        let ex = extract_block(net, block);
        warnings.extend(ex.warnings.iter().cloned());
        let assr = compile_network_capped(&ex.network, max_cols)?;
        let quotient = block_simulation(&assr);
        built.push((ex, assr, quotient));
    }

    let residual_ids: Vec<usize> =
        (0..net.nodes.len()).filter(|i| !owner.contains_key(i)).collect();
    let residual_pos: HashMap<usize, usize> =
        residual_ids.iter().enumerate().map(|(p, &i)| (i, p)).collect();

    // digit position of each declared output node, per block
    let declared_pos: Vec<HashMap<usize, usize>> = blocks
        .iter()
        .map(|block| {
            block
                .outputs
                .iter()
                .enumerate()
                .filter_map(|(digit, name)| net.node_index(name).map(|i| (i, digit)))
                .collect()
        })
        .collect();

    let source_of = |node: usize| -> Option<Source> {
        if let Some(&p) = residual_pos.get(&node) {
            return Some(Source::Residual(p));
        }
        let b = owner[&node];
        declared_pos[b].get(&node).map(|&digit| Source::BlockOutput { block: b, digit })
    };
    let unresolved = |consumer: &str, node: usize| AggregationError::UnresolvableInput {
        consumer: consumer.to_string(),
        node: net.nodes[node].name.clone(),
        block: blocks[owner[&node]].name.clone(),
    };

    let mut agg_blocks = Vec::new();
    for (block, (ex, assr, quotient)) in blocks.iter().zip(built) {
        let mut wires = Vec::new();
        for &input in &ex.io.inputs {
            wires.push(source_of(input).ok_or_else(|| unresolved(&block.name, input))?);
        }
        agg_blocks.push(AggregatedBlock {
            name: block.name.clone(),
            members: ex.members.iter().map(|&i| net.nodes[i].name.clone()).collect(),
            declared: block.outputs.clone(),
            inputs: ex.io.inputs.iter().map(|&i| net.nodes[i].name.clone()).collect(),
            controls: ex.io.controls.clone(),
            wires,
            assr,
            quotient,
        });
    }

    let residual: Vec<ResidualNode> = residual_ids
        .iter()
        .map(|&i| ResidualNode {
            name: net.nodes[i].name.clone(),
            update: net.nodes[i].update.clone(),
        })
        .collect();
    for r in &residual {
        for v in r.update.var_set() {
            if let Some(node) = net.node_index(v) {
                if source_of(node).is_none() {
                    return Err(unresolved(&r.name, node));
                }
            }
        }
    }

    let mut outputs = Vec::new();
    for out in &net.outputs {
        let Expr::Var(name) = &out.expr else {
            return Err(AggregationError::CompoundOutput { output: out.name.clone() });
        };
        let source = net
            .node_index(name)
            .and_then(&source_of)
            .ok_or_else(|| AggregationError::UnboundOutput {
                output: out.name.clone(),
                name: name.clone(),
            })?;
        outputs.push(OutputBinding { name: out.name.clone(), source });
    }

    Ok(AggregatedNetwork {
        k: net.k,
        controls: net.controls.clone(),
        blocks: agg_blocks,
        residual,
        outputs,
        warnings,
    })
}
