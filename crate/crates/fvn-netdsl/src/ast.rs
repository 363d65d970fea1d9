use std::collections::BTreeSet;

/// Binary connective of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    And,
    Or,
    Implies,
    Iff,
    Xor,
}

/// Update-rule expression over k-valued variables.
///
/// Values are carried as 1-based truth levels: level 1 is `true`, level k is
/// `false`, and intermediate levels sit in between. The connectives are the
/// standard min/max family on levels, see [`Expr::eval`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Const(bool),
    Not(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    /// Explicit truth table: `entries[i-1]` is the 1-based output level for
    /// composite argument index `i`, first argument most significant. A
    /// 0-ary table is a constant.
    Table { entries: Vec<usize>, args: Vec<Expr> },
}

impl Expr {
    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn not(e: Expr) -> Self {
        Expr::Not(Box::new(e))
    }

    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Self {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    /// Evaluate on truth levels. `lookup` resolves a variable name to its
    /// current level in `1..=k`; the result is again a level in `1..=k`.
    ///
    /// On levels, negation mirrors (`k+1-i`), conjunction takes the max
    /// (falser) level, disjunction the min, implication is `min(k+1-a, b)`,
    /// equivalence `1 + |a-b|` and exclusive or `k - |a-b|`. For k = 2 these
    /// are exactly the Boolean connectives with 1 = true, 2 = false.
    pub fn eval(&self, k: usize, lookup: &impl Fn(&str) -> usize) -> usize {
        match self {
            Expr::Var(name) => lookup(name),
            Expr::Const(true) => 1,
            Expr::Const(false) => k,
            Expr::Not(e) => k + 1 - e.eval(k, lookup),
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(k, lookup), b.eval(k, lookup));
                match op {
                    BinOp::And => a.max(b),
                    BinOp::Or => a.min(b),
                    BinOp::Implies => (k + 1 - a).min(b),
                    BinOp::Iff => 1 + a.abs_diff(b),
                    BinOp::Xor => k - a.abs_diff(b),
                }
            }
            Expr::Table { entries, args } => {
                let mut idx = 1usize;
                for arg in args {
                    idx = (idx - 1) * k + arg.eval(k, lookup);
                }
                entries[idx - 1]
            }
        }
    }

    /// Collect every variable name occurring in the expression.
    pub fn vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Expr::Var(name) => {
                out.insert(name);
            }
            Expr::Const(_) => {}
            Expr::Not(e) => e.vars(out),
            Expr::Bin(_, a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Table { args, .. } => {
                for a in args {
                    a.vars(out);
                }
            }
        }
    }

    pub fn var_set(&self) -> BTreeSet<&str> {
        let mut s = BTreeSet::new();
        self.vars(&mut s);
        s
    }
}

/// One state node and its update rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub name: String,
    pub update: Expr,
}

/// One declared output and the expression it observes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub name: String,
    pub expr: Expr,
}

/// A block annotation: a named subset of nodes with its declared output
/// nodes (the members other blocks are allowed to read).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub members: Vec<String>,
    pub outputs: Vec<String>,
}

/// A parsed k-valued network. Node order is update-rule order in the source;
/// that order fixes the composite state index everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    pub name: String,
    pub k: usize,
    pub controls: Vec<String>,
    pub nodes: Vec<Node>,
    pub outputs: Vec<Output>,
    pub blocks: Vec<Block>,
}

impl Network {
    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn control_index(&self, name: &str) -> Option<usize> {
        self.controls.iter().position(|c| c == name)
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// Advance every node one step. `state` and `controls` carry 1-based
    /// levels in node/control declaration order.
    pub fn step(&self, state: &[usize], controls: &[usize]) -> Vec<usize> {
        assert_eq!(state.len(), self.nodes.len());
        assert_eq!(controls.len(), self.controls.len());
        let lookup = |name: &str| self.lookup(name, state, controls);
        self.nodes.iter().map(|n| n.update.eval(self.k, &lookup)).collect()
    }

    /// Evaluate the declared outputs at a state.
    pub fn eval_outputs(&self, state: &[usize], controls: &[usize]) -> Vec<usize> {
        let lookup = |name: &str| self.lookup(name, state, controls);
        self.outputs.iter().map(|o| o.expr.eval(self.k, &lookup)).collect()
    }

    fn lookup(&self, name: &str, state: &[usize], controls: &[usize]) -> usize {
        if let Some(i) = self.node_index(name) {
            state[i]
        } else if let Some(j) = self.control_index(name) {
            controls[j]
        } else {
            unreachable!("validated network has no unknown variable `{name}`")
        }
    }
}

/// A raw transition system: explicit successor sets plus a total labeling of
/// states by observations. Successor sets may be empty (partial systems) and
/// need not be singletons (nondeterministic systems).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionSystem {
    pub name: String,
    pub states: Vec<String>,
    /// Empty for autonomous systems.
    pub inputs: Vec<String>,
    pub obs: Vec<String>,
    /// `trans[input][state]` = sorted 0-based successor state indices.
    /// Autonomous systems use a single input slot.
    pub trans: Vec<Vec<Vec<usize>>>,
    /// Per state, 0-based index into `obs`.
    pub labels: Vec<usize>,
}

impl TransitionSystem {
    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    /// Number of input slots in `trans` (1 for autonomous systems).
    pub fn n_input_slots(&self) -> usize {
        self.inputs.len().max(1)
    }

    pub fn is_autonomous(&self) -> bool {
        self.inputs.is_empty()
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }
}
