use fvn_netdsl::{parse_expr, parse_network, parse_transition_system, BinOp, Expr};

#[test]
fn parses_a_full_network() {
    let src = "\
# toy appetite switch
net appetite k=2
controls u1 u2
x1 <- x2 & !u1
x2 <- table[1 2 2 1](x1, x2)
x3 <- x1 -> x2 -> u2
output y1 = x1 | x2
block core = {x1, x2} outputs {x2}
";
    let net = parse_network(src).unwrap();
    assert_eq!(net.name, "appetite");
    assert_eq!(net.k, 2);
    assert_eq!(net.controls, vec!["u1", "u2"]);
    assert_eq!(net.nodes.len(), 3);
    assert_eq!(net.nodes[0].name, "x1");
    assert_eq!(net.outputs.len(), 1);
    assert_eq!(net.blocks[0].members, vec!["x1", "x2"]);
    assert_eq!(net.blocks[0].outputs, vec!["x2"]);

    // x3's rule is right-associated: x1 -> (x2 -> u2)
    let Expr::Bin(BinOp::Implies, a, b) = &net.nodes[2].update else {
        panic!("expected implication at the top");
    };
    assert_eq!(**a, Expr::var("x1"));
    assert!(matches!(**b, Expr::Bin(BinOp::Implies, ..)));
}

#[test]
fn operator_precedence_binds_as_documented() {
    // ! > & > | > ^ > -> > <->
    let e = parse_expr("!a & b | c ^ d -> e <-> f").unwrap();
    let Expr::Bin(BinOp::Iff, lhs, _) = e else { panic!("<-> loosest") };
    let Expr::Bin(BinOp::Implies, impl_lhs, _) = *lhs else { panic!("-> next") };
    let Expr::Bin(BinOp::Xor, xor_lhs, _) = *impl_lhs else { panic!("^ next") };
    let Expr::Bin(BinOp::Or, or_lhs, _) = *xor_lhs else { panic!("| next") };
    let Expr::Bin(BinOp::And, and_lhs, _) = *or_lhs else { panic!("& next") };
    assert_eq!(*and_lhs, Expr::not(Expr::var("a")));

    let chained = parse_expr("a <-> b <-> c").unwrap();
    let Expr::Bin(BinOp::Iff, l, _) = chained else { panic!() };
    assert!(matches!(*l, Expr::Bin(BinOp::Iff, ..)), "<-> is left-associative");
}

#[test]
fn printing_then_reparsing_is_identity() {
    let atoms = [Expr::var("a"), Expr::var("b"), Expr::Const(true)];
    let ops = [BinOp::And, BinOp::Or, BinOp::Implies, BinOp::Iff, BinOp::Xor];
    let mut depth1: Vec<Expr> = atoms.to_vec();
    for a in &atoms {
        depth1.push(Expr::not(a.clone()));
        for op in ops {
            for b in &atoms {
                depth1.push(Expr::bin(op, a.clone(), b.clone()));
            }
        }
    }
    let mut depth2: Vec<Expr> = Vec::new();
    for a in &depth1 {
        depth2.push(Expr::not(a.clone()));
        for op in ops {
            for b in &depth1 {
                depth2.push(Expr::bin(op, a.clone(), b.clone()));
            }
        }
    }
    depth2.push(Expr::Table {
        entries: vec![2, 1, 1, 2],
        args: vec![depth1[5].clone(), Expr::var("b")],
    });
    for e in depth1.iter().chain(&depth2) {
        let printed = e.to_string();
        let back = parse_expr(&printed).unwrap_or_else(|err| panic!("`{printed}`: {err}"));
        assert_eq!(&back, e, "round trip of `{printed}`");
    }
}

#[test]
fn eval_matches_boolean_truth_tables() {
    let k = 2;
    // level 1 = true, level 2 = false
    let cases = [
        ("a & b", [1, 2, 2, 2]),
        ("a | b", [1, 1, 1, 2]),
        ("a -> b", [1, 2, 1, 1]),
        ("a <-> b", [1, 2, 2, 1]),
        ("a ^ b", [2, 1, 1, 2]),
    ];
    for (src, want) in cases {
        let e = parse_expr(src).unwrap();
        let mut got = Vec::new();
        for a in 1..=2 {
            for b in 1..=2 {
                got.push(e.eval(k, &|name| if name == "a" { a } else { b }));
            }
        }
        assert_eq!(got, want, "{src}");
    }
    let not = parse_expr("!a").unwrap();
    assert_eq!(not.eval(k, &|_| 1), 2);
    assert_eq!(not.eval(k, &|_| 2), 1);
}

#[test]
fn eval_on_three_levels_uses_min_max_and_distance() {
    let k = 3;
    let e = |s: &str| parse_expr(s).unwrap();
    let at = |expr: &Expr, a: usize, b: usize| expr.eval(k, &|n| if n == "a" { a } else { b });
    assert_eq!(e("!a").eval(k, &|_| 2), 2, "middle level is its own negation");
    assert_eq!(at(&e("a & b"), 1, 2), 2);
    assert_eq!(at(&e("a | b"), 3, 2), 2);
    assert_eq!(at(&e("a -> b"), 3, 3), 1, "false implies anything");
    assert_eq!(at(&e("a -> b"), 1, 3), 3);
    assert_eq!(at(&e("a <-> b"), 2, 2), 1);
    assert_eq!(at(&e("a <-> b"), 1, 3), 3);
    assert_eq!(at(&e("a ^ b"), 1, 3), 1);
    assert_eq!(at(&e("a ^ b"), 2, 2), 3);
    assert_eq!(e("true").eval(k, &|_| 9), 1);
    assert_eq!(e("false").eval(k, &|_| 9), 3);
}

#[test]
fn tables_evaluate_by_composite_index() {
    let e = parse_expr("table[3 1 2 2 1 3 1 2 3](a, b)").unwrap();
    let expect = [
        ((1, 1), 3),
        ((1, 2), 1),
        ((1, 3), 2),
        ((2, 1), 2),
        ((2, 2), 1),
        ((2, 3), 3),
        ((3, 1), 1),
        ((3, 2), 2),
        ((3, 3), 3),
    ];
    for ((a, b), want) in expect {
        assert_eq!(e.eval(3, &|n| if n == "a" { a } else { b }), want);
    }
    let constant = parse_expr("table[2]()").unwrap();
    assert_eq!(constant.eval(3, &|_| 1), 2);
}

#[test]
fn network_step_and_outputs() {
    let src = "\
net counter k=2
controls u
x1 <- u
x2 <- x1
output y = x1 & x2
";
    let net = parse_network(src).unwrap();
    let s0 = vec![2, 2];
    let s1 = net.step(&s0, &[1]);
    assert_eq!(s1, vec![1, 2]);
    let s2 = net.step(&s1, &[1]);
    assert_eq!(s2, vec![1, 1]);
    assert_eq!(net.eval_outputs(&s2, &[1]), vec![1]);
    assert_eq!(net.eval_outputs(&s1, &[1]), vec![2]);
}

#[test]
fn network_errors_carry_line_and_identifier() {
    let dup = parse_network("net n k=2\nx1 <- x1\nx1 <- x1\n").unwrap_err();
    assert_eq!(dup.line, 3);
    assert_eq!(dup.identifier.as_deref(), Some("x1"));

    let unknown = parse_network("net n k=2\nx1 <- x9\n").unwrap_err();
    assert_eq!(unknown.line, 2);
    assert_eq!(unknown.identifier.as_deref(), Some("x9"));

    let reserved = parse_network("net n k=2\ntable <- x1\n").unwrap_err();
    assert_eq!(reserved.line, 2);

    let missing = parse_network("x1 <- x1\n").unwrap_err();
    assert!(missing.msg.contains("net"), "{}", missing.msg);

    let stray = parse_network("net n k=2\nx1 <- x1 @\n").unwrap_err();
    assert_eq!((stray.line, stray.col), (2, 10));

    let bad_block = parse_network("net n k=2\nx1 <- x1\nblock b = {x2} outputs {x2}\n").unwrap_err();
    assert_eq!(bad_block.line, 3);
    assert_eq!(bad_block.identifier.as_deref(), Some("x2"));

    let out_not_member =
        parse_network("net n k=2\nx1 <- x1\nx2 <- x1\nblock b = {x1} outputs {x2}\n").unwrap_err();
    assert_eq!(out_not_member.line, 4);

    let bad_table = parse_network("net n k=2\nx1 <- table[1 2 1](x1)\n").unwrap_err();
    assert_eq!(bad_table.line, 2);
    assert!(bad_table.msg.contains("entries"), "{}", bad_table.msg);
}

#[test]
fn transition_system_with_partial_and_nondeterministic_rows() {
    let src = "\
ts four_state
states x1 x2 x3 x4
inputs u1 u2
obs O1 O2 O3
trans x1 u1 -> {x2, x3}
trans x2 u1 -> {x2, x3}
trans x4 u1 -> {x2, x4}
trans x2 u2 -> {x4}
trans x3 u2 -> {x2, x3}
label x1 = O1
label x2 = O2
label x3 = O3
label x4 = O2
";
    let ts = parse_transition_system(src).unwrap();
    assert_eq!(ts.n_states(), 4);
    assert_eq!(ts.inputs.len(), 2);
    assert_eq!(ts.trans[0][0], vec![1, 2]);
    assert_eq!(ts.trans[0][2], Vec::<usize>::new(), "omitted pair is empty");
    assert_eq!(ts.trans[1][1], vec![3]);
    assert_eq!(ts.labels, vec![0, 1, 2, 1]);
}

#[test]
fn autonomous_transition_system_omits_inputs() {
    let src = "\
ts loop
states a b
obs O1 O2
trans a -> {b}
trans b -> {a}
label a = O1
label b = O2
";
    let ts = parse_transition_system(src).unwrap();
    assert!(ts.is_autonomous());
    assert_eq!(ts.n_input_slots(), 1);
    assert_eq!(ts.trans[0][0], vec![1]);
}

#[test]
fn transition_system_errors() {
    let base = "ts t\nstates a b\nobs O\nlabel a = O\nlabel b = O\n";

    let dup = parse_transition_system(&format!("{base}trans a -> {{b}}\ntrans a -> {{a}}\n"))
        .unwrap_err();
    assert_eq!(dup.line, 7);

    let unlabeled = parse_transition_system("ts t\nstates a b\nobs O\nlabel a = O\n").unwrap_err();
    assert_eq!(unlabeled.identifier.as_deref(), Some("b"));

    let ghost = parse_transition_system(&format!("{base}trans c -> {{a}}\n")).unwrap_err();
    assert_eq!(ghost.identifier.as_deref(), Some("c"));

    let spurious_input =
        parse_transition_system(&format!("{base}trans a u1 -> {{a}}\n")).unwrap_err();
    assert!(spurious_input.msg.contains("autonomous"), "{}", spurious_input.msg);
}

#[test]
fn network_display_reparses_to_the_same_network() {
    let src = "\
net roundtrip k=3
controls u1
x1 <- table[1 2 3 3 2 1 2 2 2](x2, u1)
x2 <- !x1 | x2 <-> x1
output y1 = x1 ^ x2
block all = {x1, x2} outputs {x1}
";
    let net = parse_network(src).unwrap();
    let printed = net.to_string();
    let back = parse_network(&printed).unwrap();
    assert_eq!(back, net);
}
