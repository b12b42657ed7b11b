//! Evaluation of expressions to normal-form algebra elements.

use mpweyl::algebra::{AlgebraElement, GeneratorSymbol, IndexPart, NormalMonomial, WeylAlgebra};
use mpweyl::scalars::RationalScalar;
use mpweyl::uqrs::{u_image, UGenerator};
use num_rational::BigRational;

use super::ast::{BinOp, Expr, ExprKind, Symbol};
use crate::error::CliError;

fn domain(e: &Expr, message: impl Into<String>) -> CliError {
    CliError::at(crate::error::ErrorKind::Domain, message, e.span)
}

fn symbol_value(a: &WeylAlgebra, s: Symbol) -> AlgebraElement {
    let gen = |g: GeneratorSymbol| a.generator(g).expect("index checked by the parser");
    let quantum = |g: UGenerator| u_image(a, &g).expect("index checked by the parser");
    match s {
        Symbol::R(i) => AlgebraElement::scalar(RationalScalar::r(i)),
        Symbol::S(i) => AlgebraElement::scalar(RationalScalar::s(i)),
        Symbol::Rho(i) => gen(GeneratorSymbol::rho(i, 1)),
        Symbol::Sigma(i) => gen(GeneratorSymbol::sigma(i, 1)),
        Symbol::X(i) => gen(GeneratorSymbol::x(i)),
        Symbol::Y(i) => gen(GeneratorSymbol::y(i)),
        Symbol::E(i) => quantum(UGenerator::e(i)),
        Symbol::F(i) => quantum(UGenerator::f(i)),
        Symbol::W(i) => quantum(UGenerator::omega(i, 1)),
        Symbol::Wp(i) => quantum(UGenerator::omega_prime(i, 1)),
    }
}

/// The inverse of `c · m` for a torus monomial `m`.
fn invert_torus_term(m: &NormalMonomial, c: &RationalScalar) -> Option<AlgebraElement> {
    if !m.is_torus() {
        return None;
    }
    let inv = m.parts().fold(NormalMonomial::one(), |acc, (i, p)| {
        acc.with_part(i, IndexPart { rho: -p.rho, sigma: -p.sigma, ..IndexPart::default() })
    });
    Some(AlgebraElement::term(inv, c.inv().ok()?))
}

/// Evaluate `e` in `A_{r,s}(n)` for `n = a.rank()`.
pub fn eval(a: &WeylAlgebra, e: &Expr) -> Result<AlgebraElement, CliError> {
    match &e.kind {
        ExprKind::Int(v) => Ok(AlgebraElement::scalar(RationalScalar::from_rational(BigRational::from_integer(v.clone())))),
        ExprKind::Sym(s) => Ok(symbol_value(a, *s)),
        ExprKind::Neg(inner) => Ok(eval(a, inner)?.scale(&RationalScalar::from_int(-1))),
        ExprKind::Binary(op, l, r) => {
            let (lv, rv) = (eval(a, l)?, eval(a, r)?);
            match op {
                BinOp::Add => Ok(lv.add_ref(&rv)),
                BinOp::Sub => Ok(lv.sub_ref(&rv)),
                BinOp::Mul => Ok(a.multiply(&lv, &rv)),
                BinOp::Div => {
                    let (Some(num), Some(den)) = (lv.as_scalar(), rv.as_scalar()) else {
                        return Err(domain(e, "'/' is only defined between scalars"));
                    };
                    num.checked_div(&den)
                        .map(AlgebraElement::scalar)
                        .map_err(|_| domain(r, "division by zero"))
                }
            }
        }
        ExprKind::Pow(base, k) => {
            let bv = eval(a, base)?;
            let k = *k;
            if let Some(c) = bv.as_scalar() {
                return c.pow(k).map(AlgebraElement::scalar).map_err(|_| domain(e, "zero has no negative powers"));
            }
            let (bv, k) = if k < 0 {
                let single = (bv.len() == 1).then(|| bv.terms().next().expect("one term"));
                let inv = single
                    .and_then(|(m, c)| invert_torus_term(m, c))
                    .ok_or_else(|| domain(e, "negative powers need an invertible torus monomial"))?;
                (inv, -k)
            } else {
                (bv, k)
            };
            let k = u32::try_from(k).map_err(|_| domain(e, "exponent is too large"))?;
            Ok(a.pow(&bv, k))
        }
    }
}
