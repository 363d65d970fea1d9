use crate::structure::{operator_structure_matrix, Connective};
use crate::{Assr, CompileError, Trans, DEFAULT_MAX_COLS};
use fvn_netdsl::{Expr, Network};
use fvn_stp::{power_reducing_matrix, swap_matrix, LogicalMatrix, MatrixError};
use std::collections::HashMap;

/// `k^e`, saturating instead of wrapping so cap checks stay honest.
fn sat_pow(k: usize, e: usize) -> usize {
    let mut v = 1usize;
    for _ in 0..e {
        v = v.saturating_mul(k);
    }
    v
}

/// Expression with variables resolved to slot positions, for fast
/// per-column evaluation.
enum Slotted {
    Slot(usize),
    Level(usize),
    Not(Box<Slotted>),
    Bin(Connective, Box<Slotted>, Box<Slotted>),
    Table { entries: Vec<usize>, args: Vec<Slotted> },
}

fn resolve(expr: &Expr, pos: &HashMap<&str, usize>, k: usize) -> Result<Slotted, CompileError> {
    Ok(match expr {
        Expr::Var(name) => {
            let Some(&slot) = pos.get(name.as_str()) else {
                return Err(CompileError::UnknownVariable { name: name.clone() });
            };
            Slotted::Slot(slot)
        }
        Expr::Const(true) => Slotted::Level(1),
        Expr::Const(false) => Slotted::Level(k),
        Expr::Not(e) => Slotted::Not(Box::new(resolve(e, pos, k)?)),
        Expr::Bin(op, a, b) => Slotted::Bin(
            (*op).into(),
            Box::new(resolve(a, pos, k)?),
            Box::new(resolve(b, pos, k)?),
        ),
        Expr::Table { entries, args } => {
            check_table(entries, args.len(), k)?;
            let args = args
                .iter()
                .map(|a| resolve(a, pos, k))
                .collect::<Result<Vec<_>, _>>()?;
            Slotted::Table { entries: entries.clone(), args }
        }
    })
}

fn check_table(entries: &[usize], arity: usize, k: usize) -> Result<(), CompileError> {
    let want = sat_pow(k, arity);
    if entries.len() != want {
        return Err(CompileError::Matrix(MatrixError::ShapeMismatch {
            rows: k,
            cols: want,
            len: entries.len(),
        }));
    }
    for (j, &e) in entries.iter().enumerate() {
        if e == 0 || e > k {
            return Err(CompileError::Matrix(MatrixError::IndexOutOfRange {
                col: j,
                index: e,
                rows: k,
            }));
        }
    }
    Ok(())
}

fn eval_slotted(e: &Slotted, k: usize, vals: &[usize]) -> usize {
    match e {
        Slotted::Slot(i) => vals[*i],
        Slotted::Level(v) => *v,
        Slotted::Not(inner) => k + 1 - eval_slotted(inner, k, vals),
        Slotted::Bin(op, a, b) => {
            let (a, b) = (eval_slotted(a, k, vals), eval_slotted(b, k, vals));
            match op {
                Connective::And => a.max(b),
                Connective::Or => a.min(b),
                Connective::Implies => (k + 1 - a).min(b),
                Connective::Iff => 1 + a.abs_diff(b),
                Connective::Xor => k - a.abs_diff(b),
                Connective::Not => unreachable!("negation is unary"),
            }
        }
        Slotted::Table { entries, args } => {
            let mut idx = 1usize;
            for a in args {
                idx = (idx - 1) * k + eval_slotted(a, k, vals);
            }
            entries[idx - 1]
        }
    }
}

/// Advance a 1-based odometer over `len` k-valued digits, last digit fastest,
/// matching composite index order.
fn bump(vals: &mut [usize], k: usize) {
    for v in vals.iter_mut().rev() {
        if *v < k {
            *v += 1;
            return;
        }
        *v = 1;
    }
}

/// Compile an expression to its k x k^vars.len() structure matrix by direct
/// evaluation on every composite column.
pub fn compile_expr(expr: &Expr, vars: &[&str], k: usize) -> Result<LogicalMatrix, CompileError> {
    let cols = sat_pow(k, vars.len());
    if cols > DEFAULT_MAX_COLS {
        return Err(CompileError::TooLarge { cols, cap: DEFAULT_MAX_COLS });
    }
    let pos: HashMap<&str, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let slotted = resolve(expr, &pos, k)?;
    let mut out = Vec::with_capacity(cols);
    let mut vals = vec![1usize; vars.len()];
    for c in 0..cols {
        out.push(eval_slotted(&slotted, k, &vals));
        if c + 1 < cols {
            bump(&mut vals, k);
        }
    }
    Ok(LogicalMatrix::new(k, out)?)
}

/// Compile a network into its ASSR with the default column cap.
pub fn compile_network(net: &Network) -> Result<Assr, CompileError> {
    compile_network_capped(net, DEFAULT_MAX_COLS)
}

/// Compile a network into its ASSR, refusing when the transition matrix
/// would need more than `max_cols` columns.
///
/// Variable order of the composite indices is controls first (declaration
/// order), then nodes (update-rule order); both L's columns and H's follow
/// it, so column `(j-1)*k^n + i` of L is state `i` under control `j`.
pub fn compile_network_capped(net: &Network, max_cols: usize) -> Result<Assr, CompileError> {
    let k = net.k;
    let m = net.controls.len();
    let n = net.nodes.len();
    let cols = sat_pow(k, m + n);
    if cols > max_cols {
        return Err(CompileError::TooLarge { cols, cap: max_cols });
    }
    let n_states = sat_pow(k, n);
    let m_inputs = sat_pow(k, m);

    for out in &net.outputs {
        for v in out.expr.var_set() {
            if net.control_index(v).is_some() {
                return Err(CompileError::ControlInOutput {
                    output: out.name.clone(),
                    control: v.to_string(),
                });
            }
        }
    }

    let mut pos: HashMap<&str, usize> = HashMap::new();
    for (j, c) in net.controls.iter().enumerate() {
        pos.insert(c, j);
    }
    for (i, node) in net.nodes.iter().enumerate() {
        pos.insert(&node.name, m + i);
    }

    let rules = net
        .nodes
        .iter()
        .map(|node| resolve(&node.update, &pos, k))
        .collect::<Result<Vec<_>, _>>()?;

    let mut l_cols = Vec::with_capacity(cols);
    let mut vals = vec![1usize; m + n];
    for c in 0..cols {
        let mut row = 1usize;
        for rule in &rules {
            row = (row - 1) * k + eval_slotted(rule, k, &vals);
        }
        l_cols.push(row);
        if c + 1 < cols {
            bump(&mut vals, k);
        }
    }
    let l = LogicalMatrix::new(n_states, l_cols)?;

    let h = if net.outputs.is_empty() {
        LogicalMatrix::ones_row(n_states)
    } else {
        let outs = net
            .outputs
            .iter()
            .map(|o| resolve(&o.expr, &pos, k))
            .collect::<Result<Vec<_>, _>>()?;
        let mut h_cols = Vec::with_capacity(n_states);
        let mut vals = vec![1usize; m + n];
        for c in 0..n_states {
            let mut row = 1usize;
            for o in &outs {
                row = (row - 1) * k + eval_slotted(o, k, &vals);
            }
            h_cols.push(row);
            if c + 1 < n_states {
                bump(&mut vals[m..], k);
            }
        }
        LogicalMatrix::new(sat_pow(k, net.outputs.len()), h_cols)?
    };

    Ok(Assr::new(n_states, m_inputs, h.rows(), Trans::Logical(l), h)?)
}

/// Compile an expression by composing structure matrices: factor matrices
/// are joined with semi-tensor products, then the factor list is rewritten
/// into the requested variable order with swap matrices, duplicate factors
/// are merged with power-reducing matrices, and unused variables are padded
/// in with all-ones rows. Exists as an independent construction to check
/// [`compile_expr`] against; both must agree on every expression.
pub fn compile_expr_algebraic(
    expr: &Expr,
    vars: &[&str],
    k: usize,
) -> Result<LogicalMatrix, CompileError> {
    let pos: HashMap<&str, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let (mut m, mut factors) = build(expr, &pos, k)?;

    // bubble adjacent factors into ascending variable order
    loop {
        let mut swapped = false;
        for i in 0..factors.len().saturating_sub(1) {
            if factors[i] > factors[i + 1] {
                m = m.stp(&around(swap_matrix(k, k), i, factors.len() - i - 2, k));
                factors.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    // merge equal neighbours
    let mut i = 0;
    while i + 1 < factors.len() {
        if factors[i] == factors[i + 1] {
            m = m.stp(&around(power_reducing_matrix(k), i, factors.len() - i - 2, k));
            factors.remove(i + 1);
        } else {
            i += 1;
        }
    }

    // pad variables the expression never reads
    for target in 0..vars.len() {
        if !factors.contains(&target) {
            let at = factors.iter().filter(|&&f| f < target).count();
            m = m.stp(&around(LogicalMatrix::ones_row(k), at, factors.len() - at, k));
            factors.insert(at, target);
        }
    }

    Ok(m)
}

/// `I_{k^left} (x) core (x) I_{k^right}`.
fn around(core: LogicalMatrix, left: usize, right: usize, k: usize) -> LogicalMatrix {
    LogicalMatrix::identity(sat_pow(k, left))
        .kron(&core)
        .kron(&LogicalMatrix::identity(sat_pow(k, right)))
}

fn build(
    expr: &Expr,
    pos: &HashMap<&str, usize>,
    k: usize,
) -> Result<(LogicalMatrix, Vec<usize>), CompileError> {
    Ok(match expr {
        Expr::Var(name) => {
            let Some(&slot) = pos.get(name.as_str()) else {
                return Err(CompileError::UnknownVariable { name: name.clone() });
            };
            (LogicalMatrix::identity(k), vec![slot])
        }
        Expr::Const(true) => (LogicalMatrix::unit(k, 1)?, Vec::new()),
        Expr::Const(false) => (LogicalMatrix::unit(k, k)?, Vec::new()),
        Expr::Not(e) => {
            let (m, f) = build(e, pos, k)?;
            (operator_structure_matrix(Connective::Not, k).stp(&m), f)
        }
        Expr::Bin(op, a, b) => combine(
            operator_structure_matrix((*op).into(), k),
            &[a, b],
            pos,
            k,
        )?,
        Expr::Table { entries, args } => {
            check_table(entries, args.len(), k)?;
            let table = LogicalMatrix::new(k, entries.clone())?;
            let refs: Vec<&Expr> = args.iter().collect();
            combine(table, &refs, pos, k)?
        }
    })
}

/// Fold argument matrices into an operator's structure matrix:
/// `op * M_1 * (I_{k^{f_1}} (x) M_2) * (I_{k^{f_1+f_2}} (x) M_3) * ...`
fn combine(
    op: LogicalMatrix,
    args: &[&Expr],
    pos: &HashMap<&str, usize>,
    k: usize,
) -> Result<(LogicalMatrix, Vec<usize>), CompileError> {
    let mut m = op;
    let mut factors: Vec<usize> = Vec::new();
    for arg in args {
        let (ma, fa) = build(arg, pos, k)?;
        let lifted = if factors.is_empty() {
            ma
        } else {
            LogicalMatrix::identity(sat_pow(k, factors.len())).kron(&ma)
        };
        m = m.stp(&lifted);
        factors.extend(fa);
    }
    Ok((m, factors))
}
