use crate::ast::{BinOp, Block, Expr, Network, Node, Output};
use crate::lexer::{is_keyword, lex_line, Sp, Tok};
use crate::ParseError;
use std::collections::{HashMap, HashSet};

/// Cursor over the tokens of a single line.
pub(crate) struct Line {
    pub no: usize,
    toks: Vec<Sp>,
    pos: usize,
    end_col: usize,
}

impl Line {
    pub(crate) fn new(no: usize, toks: Vec<Sp>) -> Self {
        let end_col = toks.last().map_or(1, |t| t.col + 1);
        Self { no, toks, pos: 0, end_col }
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub(crate) fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected {}, found {}", tok.describe(), self.found())))
        }
    }

    pub(crate) fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => {
                let Some(Tok::Ident(name)) = self.next() else { unreachable!() };
                Ok(name)
            }
            _ => Err(self.err(format!("expected an identifier, found {}", self.found()))),
        }
    }

    pub(crate) fn expect_name(&mut self) -> Result<String, ParseError> {
        let col = self.col();
        let name = self.expect_ident()?;
        if is_keyword(&name) {
            return Err(ParseError::named(
                self.no,
                col,
                &name,
                format!("`{name}` is a reserved word"),
            ));
        }
        Ok(name)
    }

    pub(crate) fn expect_int(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = self.next() else { unreachable!() };
                Ok(n)
            }
            _ => Err(self.err(format!("expected a number, found {}", self.found()))),
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected trailing {}", self.found())))
        }
    }

    pub(crate) fn found(&self) -> String {
        self.toks
            .get(self.pos)
            .map_or_else(|| "end of line".to_string(), |t| t.tok.describe())
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.no, self.col(), msg)
    }

    /// `{ name, name, ... }`, commas optional, possibly empty.
    pub(crate) fn brace_list(&mut self) -> Result<Vec<String>, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut names = Vec::new();
        loop {
            if self.eat(&Tok::RBrace) {
                return Ok(names);
            }
            names.push(self.expect_name()?);
            self.eat(&Tok::Comma);
        }
    }
}

// Expression grammar, loosest first: <-> | -> (right) | ^ | `|` | & | ! | atom.

pub(crate) fn parse_expr_line(line: &mut Line) -> Result<Expr, ParseError> {
    parse_iff(line)
}

fn parse_iff(line: &mut Line) -> Result<Expr, ParseError> {
    let mut e = parse_implies(line)?;
    while line.eat(&Tok::DArrow) {
        let rhs = parse_implies(line)?;
        e = Expr::bin(BinOp::Iff, e, rhs);
    }
    Ok(e)
}

fn parse_implies(line: &mut Line) -> Result<Expr, ParseError> {
    let lhs = parse_xor(line)?;
    if line.eat(&Tok::Arrow) {
        let rhs = parse_implies(line)?;
        Ok(Expr::bin(BinOp::Implies, lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn parse_xor(line: &mut Line) -> Result<Expr, ParseError> {
    let mut e = parse_or(line)?;
    while line.eat(&Tok::Caret) {
        let rhs = parse_or(line)?;
        e = Expr::bin(BinOp::Xor, e, rhs);
    }
    Ok(e)
}

fn parse_or(line: &mut Line) -> Result<Expr, ParseError> {
    let mut e = parse_and(line)?;
    while line.eat(&Tok::Pipe) {
        let rhs = parse_and(line)?;
        e = Expr::bin(BinOp::Or, e, rhs);
    }
    Ok(e)
}

fn parse_and(line: &mut Line) -> Result<Expr, ParseError> {
    let mut e = parse_unary(line)?;
    while line.eat(&Tok::Amp) {
        let rhs = parse_unary(line)?;
        e = Expr::bin(BinOp::And, e, rhs);
    }
    Ok(e)
}

fn parse_unary(line: &mut Line) -> Result<Expr, ParseError> {
    if line.eat(&Tok::Bang) {
        Ok(Expr::not(parse_unary(line)?))
    } else {
        parse_atom(line)
    }
}

fn parse_atom(line: &mut Line) -> Result<Expr, ParseError> {
    match line.peek() {
        Some(Tok::LParen) => {
            line.next();
            let e = parse_expr_line(line)?;
            line.expect(Tok::RParen)?;
            Ok(e)
        }
        Some(Tok::Ident(name)) => match name.as_str() {
            "true" => {
                line.next();
                Ok(Expr::Const(true))
            }
            "false" => {
                line.next();
                Ok(Expr::Const(false))
            }
            "table" => {
                line.next();
                parse_table(line)
            }
            _ => {
                let name = line.expect_name()?;
                Ok(Expr::Var(name))
            }
        },
        _ => Err(line.err(format!("expected an expression, found {}", line.found()))),
    }
}

fn parse_table(line: &mut Line) -> Result<Expr, ParseError> {
    line.expect(Tok::LBracket)?;
    let mut entries = Vec::new();
    loop {
        if line.eat(&Tok::RBracket) {
            break;
        }
        entries.push(line.expect_int()?);
        line.eat(&Tok::Comma);
    }
    line.expect(Tok::LParen)?;
    let mut args = Vec::new();
    loop {
        if line.eat(&Tok::RParen) {
            break;
        }
        if !args.is_empty() {
            line.expect(Tok::Comma)?;
            if line.eat(&Tok::RParen) {
                break;
            }
        }
        args.push(parse_expr_line(line)?);
    }
    Ok(Expr::Table { entries, args })
}

/// Parse a standalone expression. Variables are not resolved here; whoever
/// embeds the expression validates them against its own context.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = lex_line(1, src)?;
    let mut line = Line::new(1, toks);
    let e = parse_expr_line(&mut line)?;
    line.expect_end()?;
    Ok(e)
}

/// Parse and validate a `.net` network description.
///
/// The format is line oriented:
///
/// ```text
/// net example k=2        # header, required first
/// controls u1 u2         # optional, at most one line
/// x1 <- x2 & !u1         # one update rule per node, order = state order
/// x2 <- table[1 2 2 1](x1, x2)
/// output y1 = x1 | x2
/// block a = {x1} outputs {x1}
/// ```
///
/// Forward references are fine: rules may mention nodes defined later.
pub fn parse_network(src: &str) -> Result<Network, ParseError> {
    enum Stmt {
        Rule { name: String, name_col: usize, expr: Expr },
        Output(Output),
        Block(Block),
    }

    let mut header: Option<(String, usize)> = None;
    let mut controls: Option<Vec<String>> = None;
    let mut stmts: Vec<(usize, Stmt)> = Vec::new();

    for (idx, text) in src.lines().enumerate() {
        let no = idx + 1;
        let toks = lex_line(no, text)?;
        if toks.is_empty() {
            continue;
        }
        let mut line = Line::new(no, toks);
        match line.peek() {
            Some(Tok::Ident(word)) if word == "net" => {
                if header.is_some() {
                    return Err(line.err("duplicate `net` header"));
                }
                if !stmts.is_empty() || controls.is_some() {
                    return Err(line.err("`net` header must come first"));
                }
                line.next();
                let name = line.expect_name()?;
                let kw_col = line.col();
                let kw = line.expect_ident()?;
                if kw != "k" {
                    return Err(ParseError::new(no, kw_col, "expected `k=<int>` after the name"));
                }
                line.expect(Tok::Eq)?;
                let k = line.expect_int()?;
                line.expect_end()?;
                header = Some((name, k));
            }
            Some(Tok::Ident(word)) if word == "controls" => {
                if controls.is_some() {
                    return Err(line.err("duplicate `controls` line"));
                }
                line.next();
                let mut names = Vec::new();
                while line.peek().is_some() {
                    names.push(line.expect_name()?);
                    line.eat(&Tok::Comma);
                }
                if names.is_empty() {
                    return Err(line.err("`controls` line names no controls"));
                }
                controls = Some(names);
            }
            Some(Tok::Ident(word)) if word == "output" => {
                line.next();
                let name = line.expect_name()?;
                line.expect(Tok::Eq)?;
                let expr = parse_expr_line(&mut line)?;
                line.expect_end()?;
                stmts.push((no, Stmt::Output(Output { name, expr })));
            }
            Some(Tok::Ident(word)) if word == "block" => {
                line.next();
                let name = line.expect_name()?;
                line.expect(Tok::Eq)?;
                let members = line.brace_list()?;
                let kw_col = line.col();
                let kw = line.expect_ident()?;
                if kw != "outputs" {
                    return Err(ParseError::new(no, kw_col, "expected `outputs {...}` after members"));
                }
                let outputs = line.brace_list()?;
                line.expect_end()?;
                stmts.push((no, Stmt::Block(Block { name, members, outputs })));
            }
            _ => {
                let name_col = line.col();
                let name = line.expect_name()?;
                line.expect(Tok::Gets)?;
                let expr = parse_expr_line(&mut line)?;
                line.expect_end()?;
                stmts.push((no, Stmt::Rule { name, name_col, expr }));
            }
        }
    }

    let Some((name, k)) = header else {
        return Err(ParseError::new(1, 1, "missing `net <name> k=<int>` header"));
    };
    if k < 2 {
        return Err(ParseError::new(1, 1, format!("k = {k} is below 2")));
    }
    let controls = controls.unwrap_or_default();

    let mut nodes = Vec::new();
    let mut outputs = Vec::new();
    let mut blocks = Vec::new();
    let mut node_lines = Vec::new();
    let mut output_lines = Vec::new();
    let mut block_lines = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for c in &controls {
        if seen.insert(c.clone(), 0).is_some() {
            return Err(ParseError::named(1, 1, c, format!("control `{c}` declared twice")));
        }
    }

    for (no, stmt) in &stmts {
        match stmt {
            Stmt::Rule { name, name_col, expr } => {
                if seen.insert(name.clone(), *no).is_some() {
                    return Err(ParseError::named(
                        *no,
                        *name_col,
                        name,
                        format!("`{name}` already has a definition"),
                    ));
                }
                nodes.push(Node { name: name.clone(), update: expr.clone() });
                node_lines.push(*no);
            }
            Stmt::Output(o) => {
                if seen.insert(o.name.clone(), *no).is_some() {
                    return Err(ParseError::named(
                        *no,
                        1,
                        &o.name,
                        format!("`{}` already has a definition", o.name),
                    ));
                }
                outputs.push(o.clone());
                output_lines.push(*no);
            }
            Stmt::Block(b) => {
                if blocks.iter().any(|p: &Block| p.name == b.name) {
                    return Err(ParseError::named(
                        *no,
                        1,
                        &b.name,
                        format!("block `{}` declared twice", b.name),
                    ));
                }
                blocks.push(b.clone());
                block_lines.push(*no);
            }
        }
    }

    if nodes.is_empty() {
        return Err(ParseError::new(1, 1, "network declares no nodes"));
    }

    let net = Network { name, k, controls, nodes, outputs, blocks };
    validate(&net, &node_lines, &output_lines, &block_lines)?;
    Ok(net)
}

fn validate(
    net: &Network,
    node_lines: &[usize],
    output_lines: &[usize],
    block_lines: &[usize],
) -> Result<(), ParseError> {
    let known: HashSet<&str> = net
        .controls
        .iter()
        .map(String::as_str)
        .chain(net.nodes.iter().map(|n| n.name.as_str()))
        .collect();

    let check_expr = |expr: &Expr, what: &str, line: usize| -> Result<(), ParseError> {
        for v in expr.var_set() {
            if !known.contains(v) {
                return Err(ParseError::named(
                    line,
                    1,
                    v,
                    format!("{what} mentions `{v}`, which is neither a node nor a control"),
                ));
            }
        }
        check_tables(expr, net.k, line)
    };

    for (node, &line) in net.nodes.iter().zip(node_lines) {
        check_expr(&node.update, &format!("update rule of `{}`", node.name), line)?;
    }
    for (out, &line) in net.outputs.iter().zip(output_lines) {
        check_expr(&out.expr, &format!("output `{}`", out.name), line)?;
    }

    for (block, &line) in net.blocks.iter().zip(block_lines) {
        let mut members = HashSet::new();
        for m in &block.members {
            if net.node_index(m).is_none() {
                return Err(ParseError::named(
                    line,
                    1,
                    m,
                    format!("block `{}` lists `{m}`, which is not a node", block.name),
                ));
            }
            if !members.insert(m.as_str()) {
                return Err(ParseError::named(
                    line,
                    1,
                    m,
                    format!("block `{}` lists `{m}` twice", block.name),
                ));
            }
        }
        let mut outs = HashSet::new();
        for o in &block.outputs {
            if !members.contains(o.as_str()) {
                return Err(ParseError::named(
                    line,
                    1,
                    o,
                    format!("block `{}` declares output `{o}` outside its members", block.name),
                ));
            }
            if !outs.insert(o.as_str()) {
                return Err(ParseError::named(
                    line,
                    1,
                    o,
                    format!("block `{}` repeats output `{o}`", block.name),
                ));
            }
        }
    }
    Ok(())
}

fn check_tables(expr: &Expr, k: usize, line: usize) -> Result<(), ParseError> {
    match expr {
        Expr::Table { entries, args } => {
            let want = k.pow(args.len() as u32);
            if entries.len() != want {
                return Err(ParseError::new(
                    line,
                    1,
                    format!(
                        "table with {} argument(s) needs {want} entries, has {}",
                        args.len(),
                        entries.len()
                    ),
                ));
            }
            for &e in entries {
                if e == 0 || e > k {
                    return Err(ParseError::new(
                        line,
                        1,
                        format!("table entry {e} is outside 1..={k}"),
                    ));
                }
            }
            for a in args {
                check_tables(a, k, line)?;
            }
            Ok(())
        }
        Expr::Not(e) => check_tables(e, k, line),
        Expr::Bin(_, a, b) => {
            check_tables(a, k, line)?;
            check_tables(b, k, line)
        }
        Expr::Var(_) | Expr::Const(_) => Ok(()),
    }
}
