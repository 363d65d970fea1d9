// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use fvn_aggregation::block_io;
use fvn_assr::{Assr, Trans};
use fvn_netdsl::{parse_network, BinOp, Block, Expr, Network, NetworkGraph, Node, Output};
use fvn_stp::{BooleanMatrix, LogicalMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fs;

pub fn fixture_net(name: &str) -> Network {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/");
    let src = fs::read_to_string(format!("{path}{name}")).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_network(&src).unwrap()
}

/// Arbitrary system: random successor sets (possibly empty), random labels.
pub fn random_assr(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize, p_max: usize) -> Assr {
    let n = rng.gen_range(2..=n_max);
    let m = rng.gen_range(1..=m_max);
    let p = rng.gen_range(1..=p_max.min(n));
    let mut l = BooleanMatrix::zeros(n, m * n);
    for j in 0..m * n {
        for i in 0..n {
            if rng.gen_bool(0.3) {
                l.set(i, j, true);
            }
        }
    }
    let h_cols: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=p)).collect();
    let h = LogicalMatrix::new(p, h_cols).unwrap();
    Assr::new(n, m, p, Trans::Boolean(l), h).unwrap()
}

/// Random Boolean expression over the given variable names.
pub fn random_expr(rng: &mut ChaCha8Rng, vars: &[String], depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        if vars.is_empty() || rng.gen_bool(0.1) {
            Expr::Const(rng.gen_bool(0.5))
        } else {
            Expr::var(&vars[rng.gen_range(0..vars.len())])
        }
    } else {
        match rng.gen_range(0..6) {
            0 => Expr::not(random_expr(rng, vars, depth - 1)),
            n => {
                let op = [BinOp::And, BinOp::Or, BinOp::Implies, BinOp::Iff, BinOp::Xor][n - 1];
                Expr::bin(
                    op,
                    random_expr(rng, vars, depth - 1),
                    random_expr(rng, vars, depth - 1),
                )
            }
        }
    }
}

/// Random Boolean network with up to one control, one declared output
/// reading a random node, and one nonempty block whose declared outputs are
/// exactly its derived boundary, so assembly always succeeds.
pub fn random_blocked_network(rng: &mut ChaCha8Rng, n_max: usize) -> Network {
    let n = rng.gen_range(2..=n_max);
    let m = rng.gen_range(0..=1usize);
    let controls: Vec<String> = (0..m).map(|j| format!("u{}", j + 1)).collect();
    let node_names: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let mut vars = node_names.clone();
    vars.extend(controls.iter().cloned());
    let nodes: Vec<Node> = node_names
        .iter()
        .map(|name| Node { name: name.clone(), update: random_expr(rng, &vars, 2) })
        .collect();
    let outputs = vec![Output {
        name: "y1".to_string(),
        expr: Expr::var(&node_names[rng.gen_range(0..n)]),
    }];
    let mut net = Network {
        name: "random".to_string(),
        k: 2,
        controls,
        nodes,
        outputs,
        blocks: Vec::new(),
    };

    let mut members: Vec<String> =
        node_names.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if members.is_empty() {
        members.push(node_names[rng.gen_range(0..n)].clone());
    }
    let graph = NetworkGraph::build(&net);
    let ids: Vec<usize> = members.iter().map(|m| net.node_index(m).unwrap()).collect();
    let io = block_io(&graph, &ids);
    let declared: Vec<String> = io.outputs.iter().map(|&i| net.nodes[i].name.clone()).collect();
    net.blocks.push(Block { name: "blk".to_string(), members, outputs: declared });
    net
}
