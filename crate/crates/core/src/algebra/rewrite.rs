//! Rewriting words to normal form.
//!
//! A word is expanded into letters: torus letters `rho_i^a`, `sigma_i^b`
//! and single `x_i`, `y_i`. The rules are
//!
//! * merge adjacent torus letters with the same key, and sort torus
//!   letters by `(index, rho before sigma)`;
//! * move torus letters left past `x_j`, `y_j`, picking up
//!   `r_i^{-a}`, `r_i^{a}` (and likewise `s_i`) when `i = j`;
//! * sort `x`/`y` letters by index when the indices differ;
//! * contract `y_i x_i` and `x_i y_i` into torus polynomials.
//!
//! Contractions lower the `x`/`y` length and the other rules lower an
//! inversion count, so every strategy terminates. Irreducible words are
//! exactly the expansions of normal monomials.

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalars::RationalScalar;

use super::element::AlgebraElement;
use super::generator::{GenKind, Word};
use super::monomial::{IndexPart, NormalMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Letter {
    /// `rho_i^e` (`sigma = false`) or `sigma_i^e` (`sigma = true`).
    Torus { index: usize, sigma: bool, exp: i64 },
    X(usize),
    Y(usize),
}

impl Letter {
    fn torus_key(&self) -> Option<(usize, bool)> {
        match *self {
            Letter::Torus { index, sigma, .. } => Some((index, sigma)),
            _ => None,
        }
    }

    fn xy_index(&self) -> Option<usize> {
        match *self {
            Letter::X(i) | Letter::Y(i) => Some(i),
            Letter::Torus { .. } => None,
        }
    }
}

pub(crate) fn letters_of(w: &Word) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    for g in w.factors() {
        match g.kind {
            GenKind::Rho | GenKind::Sigma => {
                if g.exponent != 0 {
                    out.push(Letter::Torus {
                        index: g.index,
                        sigma: g.kind == GenKind::Sigma,
                        exp: g.exponent,
                    });
                }
            }
            GenKind::X => out.extend((0..g.exponent).map(|_| Letter::X(g.index))),
            GenKind::Y => out.extend((0..g.exponent).map(|_| Letter::Y(g.index))),
        }
    }
    out
}

/// Whether positions `p, p+1` form a redex.
fn is_redex(w: &[Letter], p: usize) -> bool {
    let (a, b) = (w[p], w[p + 1]);
    match (a.torus_key(), b.torus_key()) {
        (Some(ka), Some(kb)) => ka >= kb,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (None, None) => {
            let (i, j) = (a.xy_index().unwrap(), b.xy_index().unwrap());
            i > j || (i == j && a != b)
        }
    }
}

pub(crate) fn redexes(w: &[Letter]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&p| is_redex(w, p)).collect()
}

fn leftmost_redex(w: &[Letter]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&p| is_redex(w, p))
}

fn splice(w: &[Letter], p: usize, mid: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() + mid.len());
    out.extend_from_slice(&w[..p]);
    out.extend_from_slice(mid);
    out.extend_from_slice(&w[p + 2..]);
    out
}

fn param_pow(index: usize, sigma: bool, e: i64) -> RationalScalar {
    if sigma {
        RationalScalar::s_pow(index, e)
    } else {
        RationalScalar::r_pow(index, e)
    }
}

/// `1 / (r_i^2 - s_i^2)`.
fn contraction_denominator(i: usize) -> RationalScalar {
    (RationalScalar::r_pow(i, 2) - RationalScalar::s_pow(i, 2))
        .inv()
        .expect("r_i^2 - s_i^2 is nonzero")
}

/// One rewrite step at the redex `p`; returns the weighted successor words.
pub(crate) fn step(w: &[Letter], p: usize) -> Vec<(RationalScalar, Vec<Letter>)> {
    let (a, b) = (w[p], w[p + 1]);
    match (a, b) {
        (
            Letter::Torus { index: i, sigma: si, exp: e1 },
            Letter::Torus { index: j, sigma: sj, exp: e2 },
        ) => {
            if (i, si) == (j, sj) {
                let e = e1 + e2;
                let mid: Vec<Letter> = if e == 0 {
                    vec![]
                } else {
                    vec![Letter::Torus { index: i, sigma: si, exp: e }]
                };
                vec![(RationalScalar::one(), splice(w, p, &mid))]
            } else {
                vec![(RationalScalar::one(), splice(w, p, &[b, a]))]
            }
        }
        (Letter::X(j), Letter::Torus { index: i, sigma, exp }) => {
            let c = if i == j { param_pow(i, sigma, -exp) } else { RationalScalar::one() };
            vec![(c, splice(w, p, &[b, a]))]
        }
        (Letter::Y(j), Letter::Torus { index: i, sigma, exp }) => {
            let c = if i == j { param_pow(i, sigma, exp) } else { RationalScalar::one() };
            vec![(c, splice(w, p, &[b, a]))]
        }
        (Letter::Y(i), Letter::X(j)) | (Letter::X(i), Letter::Y(j)) | (Letter::X(i), Letter::X(j)) | (Letter::Y(i), Letter::Y(j))
            if i != j =>
        {
            vec![(RationalScalar::one(), splice(w, p, &[b, a]))]
        }
        (Letter::Y(i), Letter::X(_)) => {
            let d = contraction_denominator(i);
            let rho2 = Letter::Torus { index: i, sigma: false, exp: 2 };
            let sigma2 = Letter::Torus { index: i, sigma: true, exp: 2 };
            vec![
                (&d * &RationalScalar::r_pow(i, 2), splice(w, p, &[rho2])),
                (-(&d * &RationalScalar::s_pow(i, 2)), splice(w, p, &[sigma2])),
            ]
        }
        (Letter::X(i), Letter::Y(_)) => {
            let d = contraction_denominator(i);
            let rho2 = Letter::Torus { index: i, sigma: false, exp: 2 };
            let sigma2 = Letter::Torus { index: i, sigma: true, exp: 2 };
            vec![(d.clone(), splice(w, p, &[rho2])), (-d, splice(w, p, &[sigma2]))]
        }
        _ => unreachable!("not a redex"),
    }
}

/// Read an irreducible word as a normal monomial.
pub(crate) fn monomial_of_irreducible(w: &[Letter]) -> NormalMonomial {
    let width = w
        .iter()
        .map(|l| match *l {
            Letter::Torus { index, .. } | Letter::X(index) | Letter::Y(index) => index,
        })
        .max()
        .unwrap_or(0);
    let mut parts = vec![IndexPart::default(); width];
    for l in w {
        match *l {
            Letter::Torus { index, sigma: false, exp } => parts[index - 1].rho += exp,
            Letter::Torus { index, sigma: true, exp } => parts[index - 1].sigma += exp,
            Letter::X(i) => parts[i - 1].x += 1,
            Letter::Y(i) => parts[i - 1].y += 1,
        }
    }
    NormalMonomial::from_parts(parts)
}

/// Rewrite `start` to normal form. `choose` picks one redex position from
/// the nonempty list of redexes of the current word.
pub(crate) fn normalize_letters(
    start: Vec<Letter>,
    coeff: RationalScalar,
    mut choose: impl FnMut(&[Letter]) -> Option<usize>,
) -> AlgebraElement {
    // Keyed longest-first so like terms produced along the way merge here.
    let mut pending: BTreeMap<(Reverse<usize>, Vec<Letter>), RationalScalar> = BTreeMap::new();
    let mut out = AlgebraElement::zero();
    if coeff.is_zero() {
        return out;
    }
    pending.insert((Reverse(start.len()), start), coeff);
    while let Some(((_, w), c)) = pending.pop_first() {
        match choose(&w) {
            None => out.add_term(monomial_of_irreducible(&w), c),
            Some(p) => {
                for (k, nw) in step(&w, p) {
                    let v = &c * &k;
                    match pending.entry((Reverse(nw.len()), nw)) {
                        Entry::Vacant(e) => {
                            e.insert(v);
                        }
                        Entry::Occupied(mut e) => {
                            let sum = e.get() + &v;
                            if sum.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = sum;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Leftmost-redex normalization.
pub(crate) fn normalize_leftmost(start: Vec<Letter>) -> AlgebraElement {
    normalize_letters(start, RationalScalar::one(), leftmost_redex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_words_are_normal_expansions() {
        let m = NormalMonomial::from_parts(vec![
            IndexPart { x: 2, y: 0, rho: 1, sigma: -3 },
            IndexPart { x: 0, y: 1, rho: -1, sigma: 0 },
        ]);
        let w = letters_of(&m.to_word());
        assert!(redexes(&w).is_empty(), "{w:?}");
        assert_eq!(monomial_of_irreducible(&w), m);
    }

    #[test]
    fn twist_signs() {
        // x_1 rho_1 = r_1^{-1} rho_1 x_1
        let w = vec![Letter::X(1), Letter::Torus { index: 1, sigma: false, exp: 1 }];
        let out = step(&w, 0);
        assert_eq!(out[0].0, RationalScalar::r_pow(1, -1));
        // y_1 sigma_1^2 = s_1^2 sigma_1^2 y_1
        let w = vec![Letter::Y(1), Letter::Torus { index: 1, sigma: true, exp: 2 }];
        assert_eq!(step(&w, 0)[0].0, RationalScalar::s_pow(1, 2));
    }
}
