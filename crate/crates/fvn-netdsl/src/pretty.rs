use crate::ast::{BinOp, Block, Expr, Network};
use std::fmt;

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Implies => "->",
            BinOp::Iff => "<->",
            BinOp::Xor => "^",
        }
    }

    fn level(self) -> u8 {
        match self {
            BinOp::Iff => 0,
            BinOp::Implies => 1,
            BinOp::Xor => 2,
            BinOp::Or => 3,
            BinOp::And => 4,
        }
    }

    fn right_assoc(self) -> bool {
        matches!(self, BinOp::Implies)
    }
}

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.level(),
            Expr::Not(_) => 5,
            _ => 6,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let mine = self.level();
        if mine < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Var(name) => write!(f, "{name}"),
            Expr::Const(true) => write!(f, "true"),
            Expr::Const(false) => write!(f, "false"),
            Expr::Not(e) => {
                write!(f, "!")?;
                e.fmt_at(f, 5)
            }
            Expr::Bin(op, a, b) => {
                let (la, lb) = if op.right_assoc() {
                    (op.level() + 1, op.level())
                } else {
                    (op.level(), op.level() + 1)
                };
                a.fmt_at(f, la)?;
                write!(f, " {} ", op.symbol())?;
                b.fmt_at(f, lb)
            }
            Expr::Table { entries, args } => {
                write!(f, "table[")?;
                for (i, e) in entries.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "](")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    a.fmt_at(f, 0)?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block {} = {{{}}} outputs {{{}}}", self.name, self.members.join(", "), self.outputs.join(", "))
    }
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "net {} k={}", self.name, self.k)?;
        if !self.controls.is_empty() {
            writeln!(f, "controls {}", self.controls.join(" "))?;
        }
        for n in &self.nodes {
            writeln!(f, "{} <- {}", n.name, n.update)?;
        }
        for o in &self.outputs {
            writeln!(f, "output {} = {}", o.name, o.expr)?;
        }
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}
