//! The expression language: symbols `r1, s1, rho1, sigma1, x1, y1` and
//! `e1, f1, w1, wp1`, integers, `+ - * /`, integer powers and parentheses.

mod ast;
mod eval;
mod parser;

pub use ast::{BinOp, Expr, ExprKind, Span, Symbol};
pub use eval::eval;
pub use parser::parse;
