use fvn_netdsl::{parse_network, NetworkGraph, Vertex};

#[test]
fn dependencies_and_consumers_are_inverse_views() {
    let src = "\
net wires k=2
controls u1
x1 <- x2 & u1
x2 <- x1
x3 <- x1 | x3
output y1 = x3
";
    let net = parse_network(src).unwrap();
    let g = NetworkGraph::build(&net);

    assert_eq!(g.node_deps(0), &[Vertex::Control(0), Vertex::Node(1)]);
    assert_eq!(g.node_deps(1), &[Vertex::Node(0)]);
    assert_eq!(g.node_deps(2), &[Vertex::Node(0), Vertex::Node(2)]);
    assert_eq!(g.output_deps(0), &[Vertex::Node(2)]);

    assert_eq!(g.node_consumers(0), &[Vertex::Node(1), Vertex::Node(2)]);
    assert_eq!(g.node_consumers(1), &[Vertex::Node(0)]);
    assert_eq!(g.node_consumers(2), &[Vertex::Node(2), Vertex::Output(0)]);
    assert_eq!(g.control_consumers(0), &[Vertex::Node(0)]);
}

#[test]
fn dot_output_lists_vertices_edges_and_block_clusters() {
    let src = "\
net drawn k=2
controls u1
x1 <- u1
x2 <- x1
output y1 = x2
block left = {x1} outputs {x1}
";
    let net = parse_network(src).unwrap();
    let dot = NetworkGraph::build(&net).to_dot(&net);
    assert!(dot.starts_with("digraph drawn {"));
    assert!(dot.contains("c0 [label=\"u1\", shape=diamond];"));
    assert!(dot.contains("subgraph cluster_0"));
    assert!(dot.contains("label=\"left\";"));
    assert!(dot.contains("n0 [label=\"x1\"];"));
    assert!(dot.contains("o0 [label=\"y1\", shape=box];"));
    assert!(dot.contains("c0 -> n0;"));
    assert!(dot.contains("n0 -> n1;"));
    assert!(dot.contains("n1 -> o0;"));
    assert!(dot.ends_with("}\n"));
}
