//! The defining relations as explicit residuals, and a checker that
//! normalizes each one.

use std::fmt;

use serde::Serialize;

use crate::scalars::RationalScalar;

use super::element::AlgebraElement;
use super::generator::{GeneratorSymbol as G, Word};
use super::{AlgebraError, WeylAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RelationFamily {
    /// Torus generators commute and are invertible.
    Torus,
    /// `rho_i` twists `x_j`, `y_j`.
    RhoTwist,
    /// `sigma_i` twists `x_j`, `y_j`.
    SigmaTwist,
    /// Commutation of `x`'s, of `y`'s, and of `y_i`, `x_j` for `i != j`.
    Commuting,
    /// `y_i x_i - r_i^2 x_i y_i = sigma_i^2` and its `s` partner.
    Quadratic,
    /// The contracted forms of `y_i x_i` and `x_i y_i`.
    Contraction,
    /// The two cubic down-up identities.
    DownUp,
}

/// A relation `lhs = rhs` written as a list of weighted words whose sum
/// must vanish.
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: RelationFamily,
    pub label: String,
    pub terms: Vec<(RationalScalar, Word)>,
}

impl Relation {
    fn new(family: RelationFamily, terms: Vec<(RationalScalar, Word)>) -> Self {
        let label = label_of(&terms);
        Relation { family, label, terms }
    }

    pub fn residual(&self, a: &WeylAlgebra) -> Result<AlgebraElement, AlgebraError> {
        a.combination(&self.terms)
    }
}

fn label_of(terms: &[(RationalScalar, Word)]) -> String {
    let mut s = String::new();
    for (k, (c, w)) in terms.iter().enumerate() {
        if k > 0 {
            s.push_str(" + ");
        }
        if c.is_one() {
            s.push_str(&w.to_string());
        } else if w.is_empty() {
            s.push_str(&format!("({c})"));
        } else {
            s.push_str(&format!("({c})*{w}"));
        }
    }
    s
}

fn one() -> RationalScalar {
    RationalScalar::one()
}

fn w(gs: &[G]) -> Word {
    Word(gs.to_vec())
}

fn r(i: usize, e: i64) -> RationalScalar {
    RationalScalar::r_pow(i, e)
}

fn s(i: usize, e: i64) -> RationalScalar {
    RationalScalar::s_pow(i, e)
}

/// Every defining relation of rank `n`, plus the down-up identities.
pub fn presentation_relations(n: usize) -> Vec<Relation> {
    use RelationFamily::*;
    let m1 = || RationalScalar::from_int(-1);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for (a, b) in [
                (G::rho(i, 1), G::rho(j, 1)),
                (G::rho(i, 1), G::sigma(j, 1)),
                (G::sigma(i, 1), G::sigma(j, 1)),
                (G::rho(i, -1), G::sigma(j, 1)),
                (G::rho(i, 1), G::sigma(j, -1)),
            ] {
                if i < j || (i == j && a != b) {
                    out.push(Relation::new(Torus, vec![(one(), w(&[a, b])), (m1(), w(&[b, a]))]));
                }
            }
        }
        for g in [G::rho(i, 1), G::sigma(i, 1)] {
            let inv = G { exponent: -1, ..g };
            out.push(Relation::new(Torus, vec![(one(), w(&[g, inv])), (m1(), Word::empty())]));
            out.push(Relation::new(Torus, vec![(one(), w(&[inv, g])), (m1(), Word::empty())]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let d = (i == j) as i64;
            for e in [1i64, -1] {
                out.push(Relation::new(
                    RhoTwist,
                    vec![(one(), w(&[G::rho(i, e), G::x(j)])), (-r(i, e * d), w(&[G::x(j), G::rho(i, e)]))],
                ));
                out.push(Relation::new(
                    RhoTwist,
                    vec![(one(), w(&[G::rho(i, e), G::y(j)])), (-r(i, -e * d), w(&[G::y(j), G::rho(i, e)]))],
                ));
                out.push(Relation::new(
                    SigmaTwist,
                    vec![(one(), w(&[G::sigma(i, e), G::x(j)])), (-s(i, e * d), w(&[G::x(j), G::sigma(i, e)]))],
                ));
                out.push(Relation::new(
                    SigmaTwist,
                    vec![(one(), w(&[G::sigma(i, e), G::y(j)])), (-s(i, -e * d), w(&[G::y(j), G::sigma(i, e)]))],
                ));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                out.push(Relation::new(Commuting, vec![(one(), w(&[G::x(i), G::x(j)])), (m1(), w(&[G::x(j), G::x(i)]))]));
                out.push(Relation::new(Commuting, vec![(one(), w(&[G::y(i), G::y(j)])), (m1(), w(&[G::y(j), G::y(i)]))]));
            }
            if i != j {
                out.push(Relation::new(Commuting, vec![(one(), w(&[G::y(i), G::x(j)])), (m1(), w(&[G::x(j), G::y(i)]))]));
            }
        }
    }
    for i in 1..=n {
        let (yx, xy) = (w(&[G::y(i), G::x(i)]), w(&[G::x(i), G::y(i)]));
        out.push(Relation::new(
            Quadratic,
            vec![(one(), yx.clone()), (-r(i, 2), xy.clone()), (m1(), w(&[G::sigma(i, 2)]))],
        ));
        out.push(Relation::new(
            Quadratic,
            vec![(one(), yx.clone()), (-s(i, 2), xy.clone()), (m1(), w(&[G::rho(i, 2)]))],
        ));
        let dinv = (r(i, 2) - s(i, 2)).inv().expect("nonzero");
        out.push(Relation::new(
            Contraction,
            vec![
                (one(), yx),
                (-(&r(i, 2) * &dinv), w(&[G::rho(i, 2)])),
                (&s(i, 2) * &dinv, w(&[G::sigma(i, 2)])),
            ],
        ));
        out.push(Relation::new(
            Contraction,
            vec![(one(), xy), (-dinv.clone(), w(&[G::rho(i, 2)])), (dinv, w(&[G::sigma(i, 2)]))],
        ));
        let alpha = r(i, 2) + s(i, 2);
        let beta = &r(i, 2) * &s(i, 2);
        out.push(Relation::new(
            DownUp,
            vec![
                (one(), w(&[G::y(i), G::y(i), G::x(i)])),
                (-alpha.clone(), w(&[G::y(i), G::x(i), G::y(i)])),
                (beta.clone(), w(&[G::x(i), G::y(i), G::y(i)])),
            ],
        ));
        out.push(Relation::new(
            DownUp,
            vec![
                (one(), w(&[G::y(i), G::x(i), G::x(i)])),
                (-alpha, w(&[G::x(i), G::y(i), G::x(i)])),
                (beta, w(&[G::x(i), G::x(i), G::y(i)])),
            ],
        ));
    }
    out
}

#[derive(Clone, Debug)]
pub struct RelationOutcome {
    pub family: RelationFamily,
    pub label: String,
    pub residual: AlgebraElement,
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub n: usize,
    pub outcomes: Vec<RelationOutcome>,
}

impl PresentationReport {
    pub fn all_zero(&self) -> bool {
        self.outcomes.iter().all(|o| o.residual.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome> {
        self.outcomes.iter().filter(|o| !o.residual.is_zero())
    }

    pub fn count(&self, family: RelationFamily) -> usize {
        self.outcomes.iter().filter(|o| o.family == family).count()
    }
}

impl fmt::Display for PresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.failures().count();
        writeln!(f, "n = {}: {} relations, {} nonzero residuals", self.n, self.outcomes.len(), bad)?;
        for o in self.failures() {
            writeln!(f, "  {:?}: {} -> {}", o.family, o.label, o.residual)?;
        }
        Ok(())
    }
}

/// Normalize every relation of rank `n` and report the residuals.
pub fn verify_presentation(n: usize) -> PresentationReport {
    let a = WeylAlgebra::new(n);
    let outcomes = presentation_relations(n)
        .into_iter()
        .map(|rel| RelationOutcome {
            residual: rel.residual(&a).expect("relations use valid indices"),
            family: rel.family,
            label: rel.label,
        })
        .collect();
    PresentationReport { n, outcomes }
}
