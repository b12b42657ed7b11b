//! Expression trees and their canonical text form.

use std::fmt;

use num_bigint::BigInt;

/// Position of a node's first character, 1-based.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

/// A named symbol with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    R(usize),
    S(usize),
    Rho(usize),
    Sigma(usize),
    X(usize),
    Y(usize),
    E(usize),
    F(usize),
    W(usize),
    Wp(usize),
}

impl Symbol {
    pub fn prefix(&self) -> &'static str {
        match self {
            Symbol::R(_) => "r",
            Symbol::S(_) => "s",
            Symbol::Rho(_) => "rho",
            Symbol::Sigma(_) => "sigma",
            Symbol::X(_) => "x",
            Symbol::Y(_) => "y",
            Symbol::E(_) => "e",
            Symbol::F(_) => "f",
            Symbol::W(_) => "w",
            Symbol::Wp(_) => "wp",
        }
    }

    pub fn index(&self) -> usize {
        match *self {
            Symbol::R(i)
            | Symbol::S(i)
            | Symbol::Rho(i)
            | Symbol::Sigma(i)
            | Symbol::X(i)
            | Symbol::Y(i)
            | Symbol::E(i)
            | Symbol::F(i)
            | Symbol::W(i)
            | Symbol::Wp(i) => i,
        }
    }

    /// Quantum group symbols range over `1..n-1`, the rest over `1..n`.
    pub fn is_quantum(&self) -> bool {
        matches!(self, Symbol::E(_) | Symbol::F(_) | Symbol::W(_) | Symbol::Wp(_))
    }

    pub fn from_parts(prefix: &str, i: usize) -> Option<Symbol> {
        Some(match prefix {
            "r" => Symbol::R(i),
            "s" => Symbol::S(i),
            "rho" => Symbol::Rho(i),
            "sigma" => Symbol::Sigma(i),
            "x" => Symbol::X(i),
            "y" => Symbol::Y(i),
            "e" => Symbol::E(i),
            "f" => Symbol::F(i),
            "w" => Symbol::W(i),
            "wp" => Symbol::Wp(i),
            _ => return None,
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.prefix(), self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }

    fn token(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Sym(Symbol),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// A parsed expression. Equality ignores source positions.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, _, _) => op.precedence(),
            ExprKind::Pow(..) => 3,
            ExprKind::Int(_) | ExprKind::Sym(_) | ExprKind::Neg(_) => 4,
        }
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    /// Minimal parentheses: the output parses back to an equal tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(v) => write!(f, "{v}"),
            ExprKind::Sym(s) => write!(f, "{s}"),
            ExprKind::Neg(inner) => {
                f.write_str("-")?;
                write_wrapped(f, inner, inner.precedence() < 4)
            }
            ExprKind::Binary(op, l, r) => {
                let p = op.precedence();
                write_wrapped(f, l, l.precedence() < p)?;
                f.write_str(op.token())?;
                write_wrapped(f, r, r.precedence() <= p)
            }
            ExprKind::Pow(base, k) => {
                write_wrapped(f, base, base.precedence() < 4)?;
                write!(f, "^{k}")
            }
        }
    }
}
