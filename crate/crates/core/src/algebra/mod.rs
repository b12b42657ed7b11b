//! The multiparameter Weyl algebra `A_{r,s}(n)`: words, normal forms and
//! multiplication.

mod element;
mod generator;
mod monomial;
mod rewrite;
mod verify;

pub use element::AlgebraElement;
pub use generator::{GenKind, GeneratorSymbol, Word};
pub use monomial::{IndexPart, NormalMonomial};
pub use verify::{presentation_relations, verify_presentation, PresentationReport, Relation, RelationFamily};

use std::collections::HashMap;
use std::sync::RwLock;

use thiserror::Error;

use crate::scalars::RationalScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("index {index} is outside 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{generator} cannot be raised to the power {exponent}")]
    InvalidExponent { generator: String, exponent: i64 },
}

/// Which torus generator to conjugate by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusKind {
    Rho,
    Sigma,
}

/// The algebra of rank `n` together with a cache of monomial products.
///
/// The cache only ever stores finished products, so concurrent readers
/// can at worst miss and recompute.
#[derive(Debug, Default)]
pub struct WeylAlgebra {
    n: usize,
    memo: RwLock<HashMap<(NormalMonomial, NormalMonomial), AlgebraElement>>,
}

impl Clone for WeylAlgebra {
    fn clone(&self) -> Self {
        WeylAlgebra::new(self.n)
    }
}

impl WeylAlgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        WeylAlgebra { n, memo: RwLock::new(HashMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Normal form of a word, rewriting the leftmost redex first.
    pub fn normalize(&self, w: &Word) -> Result<AlgebraElement, AlgebraError> {
        w.validate(self.n)?;
        Ok(rewrite::normalize_leftmost(rewrite::letters_of(w)))
    }

    /// Normal form of a word under a caller-chosen rewrite order. `choose`
    /// receives the current redex positions and returns an index into that
    /// list. Every choice sequence must give the same result.
    pub fn normalize_with(
        &self,
        w: &Word,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> Result<AlgebraElement, AlgebraError> {
        w.validate(self.n)?;
        Ok(rewrite::normalize_letters(
            rewrite::letters_of(w),
            RationalScalar::one(),
            |letters| {
                let r = rewrite::redexes(letters);
                if r.is_empty() {
                    None
                } else {
                    Some(r[choose(&r) % r.len()])
                }
            },
        ))
    }

    /// The element represented by a single generator symbol.
    pub fn generator(&self, g: GeneratorSymbol) -> Result<AlgebraElement, AlgebraError> {
        self.normalize(&Word(vec![g]))
    }

    pub fn multiply_monomials(&self, a: &NormalMonomial, b: &NormalMonomial) -> AlgebraElement {
        if a.is_torus() {
            return AlgebraElement::monomial(a.torus_mul(b));
        }
        if b.is_torus() {
            // move the torus part of b left through the x/y part of a
            let mut c = RationalScalar::one();
            for (i, p) in b.parts() {
                let d = a.degree(i);
                if d != 0 {
                    c = c * RationalScalar::r_pow(i, -p.rho * d) * RationalScalar::s_pow(i, -p.sigma * d);
                }
            }
            return AlgebraElement::term(b.torus_mul(a), c);
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let w = a.to_word().concat(&b.to_word());
        let out = rewrite::normalize_leftmost(rewrite::letters_of(&w));
        self.memo.write().expect("memo lock").insert(key, out.clone());
        out
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let c = ca * cb;
                for (m, v) in self.multiply_monomials(ma, mb).terms() {
                    out.add_term(m.clone(), &c * v);
                }
            }
        }
        out
    }

    /// Left-to-right product of several elements.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a AlgebraElement>) -> AlgebraElement {
        factors
            .into_iter()
            .fold(AlgebraElement::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn pow(&self, e: &AlgebraElement, k: u32) -> AlgebraElement {
        (0..k).fold(AlgebraElement::one(), |acc, _| self.multiply(&acc, e))
    }

    /// `g e g^{-1}` for `g = rho_i` or `sigma_i`.
    pub fn conjugate(&self, i: usize, kind: TorusKind, e: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if i == 0 || i > self.n {
            return Err(AlgebraError::IndexOutOfRange { index: i, n: self.n });
        }
        let (g, ginv) = match kind {
            TorusKind::Rho => (NormalMonomial::rho(i, 1), NormalMonomial::rho(i, -1)),
            TorusKind::Sigma => (NormalMonomial::sigma(i, 1), NormalMonomial::sigma(i, -1)),
        };
        let left = self.multiply(&AlgebraElement::monomial(g), e);
        Ok(self.multiply(&left, &AlgebraElement::monomial(ginv)))
    }

    /// `sum c_k * normalize(w_k)`.
    pub fn combination(&self, terms: &[(RationalScalar, Word)]) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (c, w) in terms {
            out = out.add_ref(&self.normalize(w)?.scale(c));
        }
        Ok(out)
    }

    /// Number of cached monomial products.
    pub fn memo_len(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorSymbol as G;

    fn r(i: usize, e: i64) -> RationalScalar {
        RationalScalar::r_pow(i, e)
    }
    fn s(i: usize, e: i64) -> RationalScalar {
        RationalScalar::s_pow(i, e)
    }

    #[test]
    fn contraction_yx() {
        let a = WeylAlgebra::new(1);
        let got = a.normalize(&Word(vec![G::y(1), G::x(1)])).unwrap();
        let d = (r(1, 2) - s(1, 2)).inv().unwrap();
        let want = AlgebraElement::from_terms([
            (NormalMonomial::rho(1, 2), &r(1, 2) * &d),
            (NormalMonomial::sigma(1, 2), -(&s(1, 2) * &d)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn contraction_xy() {
        let a = WeylAlgebra::new(1);
        let got = a.normalize(&Word(vec![G::x(1), G::y(1)])).unwrap();
        let d = (r(1, 2) - s(1, 2)).inv().unwrap();
        let want = AlgebraElement::from_terms([
            (NormalMonomial::rho(1, 2), d.clone()),
            (NormalMonomial::sigma(1, 2), -d),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn twist_and_commute() {
        let a = WeylAlgebra::new(2);
        // torus factors sit on the left of the basis word, so rho_1 x_1 is
        // already normal and x_1 rho_1 picks up r_1^{-1}
        let m = NormalMonomial::from_parts(vec![IndexPart { x: 1, rho: 1, ..Default::default() }]);
        let rx = a.normalize(&Word(vec![G::rho(1, 1), G::x(1)])).unwrap();
        assert_eq!(rx, AlgebraElement::monomial(m.clone()));
        let xr = a.normalize(&Word(vec![G::x(1), G::rho(1, 1)])).unwrap();
        assert_eq!(xr, AlgebraElement::term(m, r(1, -1)));
        assert_eq!(rx, xr.scale(&r(1, 1)));
        let got = a.normalize(&Word(vec![G::y(1), G::x(2)])).unwrap();
        let m = NormalMonomial::y(1, 1).with_part(2, IndexPart { x: 1, ..Default::default() });
        assert_eq!(got, AlgebraElement::monomial(m));
    }

    #[test]
    fn conjugation_formulas() {
        let a = WeylAlgebra::new(2);
        let x1 = AlgebraElement::monomial(NormalMonomial::x(1, 1));
        let y1 = AlgebraElement::monomial(NormalMonomial::y(1, 1));
        assert_eq!(a.conjugate(1, TorusKind::Rho, &x1).unwrap(), x1.scale(&r(1, 1)));
        assert_eq!(a.conjugate(1, TorusKind::Sigma, &y1).unwrap(), y1.scale(&s(1, -1)));
        let t = AlgebraElement::monomial(NormalMonomial::rho(2, 1).torus_mul(&NormalMonomial::sigma(1, 1)));
        assert_eq!(a.conjugate(1, TorusKind::Rho, &t).unwrap(), t);
        assert_eq!(a.conjugate(1, TorusKind::Rho, &AlgebraElement::monomial(NormalMonomial::x(2, 1))).unwrap(),
            AlgebraElement::monomial(NormalMonomial::x(2, 1)));
    }

    #[test]
    fn invalid_words_are_rejected() {
        let a = WeylAlgebra::new(1);
        assert!(matches!(a.normalize(&Word(vec![G::x(2)])), Err(AlgebraError::IndexOutOfRange { .. })));
        let bad = GeneratorSymbol { kind: GenKind::Y, index: 1, exponent: -1 };
        assert!(matches!(a.normalize(&Word(vec![bad])), Err(AlgebraError::InvalidExponent { .. })));
    }
}
