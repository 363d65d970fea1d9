use crate::ast::Network;
use std::collections::BTreeSet;
use std::fmt::Write;

/// A vertex of the dependency graph: a control, a state node, or a declared
/// output, each identified by its position in the network's declaration
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Control(usize),
    Node(usize),
    Output(usize),
}

/// Dependency graph of a network: an edge `v -> w` means the update rule (or
/// output expression) of `w` reads `v`.
#[derive(Debug, Clone)]
pub struct NetworkGraph {
    node_deps: Vec<Vec<Vertex>>,
    output_deps: Vec<Vec<Vertex>>,
    node_consumers: Vec<Vec<Vertex>>,
    control_consumers: Vec<Vec<Vertex>>,
}

impl NetworkGraph {
    pub fn build(net: &Network) -> Self {
        let deps_of = |expr: &crate::Expr| -> Vec<Vertex> {
            let mut out = BTreeSet::new();
            for v in expr.var_set() {
                if let Some(i) = net.node_index(v) {
                    out.insert(Vertex::Node(i));
                } else if let Some(j) = net.control_index(v) {
                    out.insert(Vertex::Control(j));
                }
            }
            out.into_iter().collect()
        };

        let node_deps: Vec<Vec<Vertex>> =
            net.nodes.iter().map(|n| deps_of(&n.update)).collect();
        let output_deps: Vec<Vec<Vertex>> =
            net.outputs.iter().map(|o| deps_of(&o.expr)).collect();

        let mut node_consumers = vec![BTreeSet::new(); net.nodes.len()];
        let mut control_consumers = vec![BTreeSet::new(); net.controls.len()];
        let mut record = |deps: &[Vertex], consumer: Vertex| {
            for d in deps {
                match d {
                    Vertex::Node(i) => {
                        node_consumers[*i].insert(consumer);
                    }
                    Vertex::Control(j) => {
                        control_consumers[*j].insert(consumer);
                    }
                    Vertex::Output(_) => unreachable!("outputs feed nothing"),
                }
            }
        };
        for (i, deps) in node_deps.iter().enumerate() {
            record(deps, Vertex::Node(i));
        }
        for (j, deps) in output_deps.iter().enumerate() {
            record(deps, Vertex::Output(j));
        }

        Self {
            node_deps,
            output_deps,
            node_consumers: node_consumers.into_iter().map(|s| s.into_iter().collect()).collect(),
            control_consumers: control_consumers
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }

    /// Vertices the update rule of node `i` reads.
    pub fn node_deps(&self, i: usize) -> &[Vertex] {
        &self.node_deps[i]
    }

    /// Vertices the expression of output `j` reads.
    pub fn output_deps(&self, j: usize) -> &[Vertex] {
        &self.output_deps[j]
    }

    /// Vertices whose expressions read node `i`.
    pub fn node_consumers(&self, i: usize) -> &[Vertex] {
        &self.node_consumers[i]
    }

    /// Vertices whose expressions read control `j`.
    pub fn control_consumers(&self, j: usize) -> &[Vertex] {
        &self.control_consumers[j]
    }

    /// Render the graph in DOT. Controls are diamonds, outputs are boxes,
    /// and block members are grouped into cluster subgraphs.
    pub fn to_dot(&self, net: &Network) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {} {{", sanitize(&net.name));
        let _ = writeln!(s, "  rankdir=LR;");
        for (j, c) in net.controls.iter().enumerate() {
            let _ = writeln!(s, "  c{j} [label=\"{c}\", shape=diamond];");
        }
        let in_block: BTreeSet<usize> = net
            .blocks
            .iter()
            .flat_map(|b| b.members.iter().filter_map(|m| net.node_index(m)))
            .collect();
        for (bi, b) in net.blocks.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{bi} {{");
            let _ = writeln!(s, "    label=\"{}\";", b.name);
            for m in &b.members {
                if let Some(i) = net.node_index(m) {
                    let _ = writeln!(s, "    n{i} [label=\"{m}\"];");
                }
            }
            let _ = writeln!(s, "  }}");
        }
        for (i, n) in net.nodes.iter().enumerate() {
            if !in_block.contains(&i) {
                let _ = writeln!(s, "  n{i} [label=\"{}\"];", n.name);
            }
        }
        for (j, o) in net.outputs.iter().enumerate() {
            let _ = writeln!(s, "  o{j} [label=\"{}\", shape=box];", o.name);
        }
        let id = |v: &Vertex| match v {
            Vertex::Control(j) => format!("c{j}"),
            Vertex::Node(i) => format!("n{i}"),
            Vertex::Output(j) => format!("o{j}"),
        };
        for (i, deps) in self.node_deps.iter().enumerate() {
            for d in deps {
                let _ = writeln!(s, "  {} -> n{i};", id(d));
            }
        }
        for (j, deps) in self.output_deps.iter().enumerate() {
            for d in deps {
                let _ = writeln!(s, "  {} -> o{j};", id(d));
            }
        }
        s.push_str("}\n");
        s
    }
}

fn sanitize(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}
