//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int | symbol | '(' expr ')' | '-' atom
//! ```
//!
//! Unary minus is part of `atom`, so `-r1^2` is `(-r1)^2`.

use num_bigint::BigInt;

use super::ast::{BinOp, Expr, ExprKind, Span, Symbol};
use crate::error::{CliError, ErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::Ident(s) => format!("symbol {s}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut p = 0;
    while p < chars.len() {
        let c = chars[p];
        let span = Span { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            p += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            p += 1;
            continue;
        }
        let start = p;
        let tok = if c.is_ascii_digit() {
            while p < chars.len() && chars[p].is_ascii_digit() {
                p += 1;
            }
            let digits: String = chars[start..p].iter().collect();
            Tok::Int(digits.parse().expect("decimal digits"))
        } else if c.is_ascii_alphabetic() {
            while p < chars.len() && chars[p].is_ascii_alphanumeric() {
                p += 1;
            }
            Tok::Ident(chars[start..p].iter().collect())
        } else {
            p += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(CliError::at(ErrorKind::Syntax, format!("unexpected character '{c}'"), span)),
            }
        };
        column += p - start;
        out.push((tok, span));
    }
    out.push((Tok::End, Span { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> CliError {
        CliError::at(ErrorKind::Syntax, format!("expected {wanted}, found {}", describe(self.peek())), self.span())
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, span) = self.bump();
            let rhs = self.term()?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, span) = self.bump();
            let rhs = self.factor()?;
            lhs = Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, span) = self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(v) = self.peek().clone() else {
            return Err(self.unexpected("an integer exponent"));
        };
        let exp_span = self.span();
        self.bump();
        let k: i64 = i64::try_from(&v)
            .map_err(|_| CliError::at(ErrorKind::Syntax, "exponent is too large", exp_span))?;
        let k = if negative { -k } else { k };
        if k < 0 {
            if let ExprKind::Sym(s @ (Symbol::X(_) | Symbol::Y(_))) = base.kind {
                return Err(CliError::at(ErrorKind::Domain, format!("{s} cannot take a negative power"), span));
            }
        }
        Ok(Expr::new(ExprKind::Pow(Box::new(base), k), span))
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::new(ExprKind::Int(v), span))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::new(ExprKind::Sym(self.symbol(&name, span)?), span))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Minus => {
                self.bump();
                let inner = self.atom()?;
                Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span))
            }
            _ => Err(self.unexpected("an integer, a symbol, '(' or '-'")),
        }
    }

    fn symbol(&self, name: &str, span: Span) -> Result<Symbol, CliError> {
        let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
        let (prefix, digits) = name.split_at(split);
        let unknown = |msg: String| CliError::at(ErrorKind::UnknownSymbol, msg, span);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(unknown(format!("unknown symbol '{name}'")));
        }
        let index: usize = digits.parse().map_err(|_| unknown(format!("index of '{name}' is too large")))?;
        let sym = Symbol::from_parts(prefix, index).ok_or_else(|| unknown(format!("unknown symbol '{name}'")))?;
        let top = if sym.is_quantum() { self.n.saturating_sub(1) } else { self.n };
        if index == 0 || index > top {
            return Err(unknown(format!("'{name}' is out of range for n = {}: indices run over 1..{top}", self.n)));
        }
        Ok(sym)
    }
}

/// Parse `text` for rank `n`.
pub fn parse(text: &str, n: usize) -> Result<Expr, CliError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, n };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}
