//! The multiparameter quantum group `U_{r,s}(sl_n)` through its image in
//! `A_{r,s}(n)`, and the resulting weight structure of `P(n)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, GeneratorSymbol as G, WeylAlgebra, Word};
use crate::modules::{act_element, BasisIndex, ModuleError, ModuleSpec, ModuleVector};
use crate::scalars::{quantum_integer, r_var, s_var, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UqrsError {
    #[error("U_{{r,s}}(sl_n) needs n >= 2, got {0}")]
    RankTooSmall(usize),
    #[error("generator index {index} is outside 1..{}", .n - 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} needs a positive exponent")]
    InvalidExponent(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UKind {
    E,
    F,
    Omega,
    OmegaPrime,
}

/// `e_i^k`, `f_i^k` (`k ≥ 1`) or `ω_i^k`, `(ω_i')^k` (`k ∈ Z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UGenerator {
    pub kind: UKind,
    pub index: usize,
    pub exponent: i64,
}

impl UGenerator {
    pub fn e(i: usize) -> Self {
        UGenerator { kind: UKind::E, index: i, exponent: 1 }
    }

    pub fn f(i: usize) -> Self {
        UGenerator { kind: UKind::F, index: i, exponent: 1 }
    }

    pub fn omega(i: usize, k: i64) -> Self {
        UGenerator { kind: UKind::Omega, index: i, exponent: k }
    }

    pub fn omega_prime(i: usize, k: i64) -> Self {
        UGenerator { kind: UKind::OmegaPrime, index: i, exponent: k }
    }

    pub fn validate(&self, n: usize) -> Result<(), UqrsError> {
        if n < 2 {
            return Err(UqrsError::RankTooSmall(n));
        }
        if self.index == 0 || self.index >= n {
            return Err(UqrsError::IndexOutOfRange { index: self.index, n });
        }
        if matches!(self.kind, UKind::E | UKind::F) && self.exponent < 1 {
            return Err(UqrsError::InvalidExponent(self.to_string()));
        }
        Ok(())
    }

    /// The image as a word in `A_{r,s}(n)`.
    pub fn image_word(&self) -> Word {
        let i = self.index;
        let k = self.exponent;
        let repeat = |a: G, b: G| Word((0..k).flat_map(|_| [a, b]).collect());
        match self.kind {
            UKind::Omega => Word(vec![G::rho(i, k), G::sigma(i + 1, k)]),
            UKind::OmegaPrime => Word(vec![G::rho(i + 1, k), G::sigma(i, k)]),
            UKind::E => repeat(G::y(i + 1), G::x(i)),
            UKind::F => repeat(G::y(i), G::x(i + 1)),
        }
    }
}

impl fmt::Display for UGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            UKind::E => "e",
            UKind::F => "f",
            UKind::Omega => "w",
            UKind::OmegaPrime => "wp",
        };
        write!(f, "{name}{}", self.index)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// Normal form of the image of one generator.
pub fn u_image(a: &WeylAlgebra, g: &UGenerator) -> Result<AlgebraElement, UqrsError> {
    g.validate(a.rank())?;
    Ok(a.normalize(&g.image_word()).expect("image uses valid indices"))
}

/// Image of a product of generators (leftmost first).
pub fn u_word_image(a: &WeylAlgebra, word: &[UGenerator]) -> Result<AlgebraElement, UqrsError> {
    let mut letters = Vec::new();
    for g in word {
        g.validate(a.rank())?;
        letters.extend(g.image_word().0);
    }
    Ok(a.normalize(&Word(letters)).expect("image uses valid indices"))
}

/// `(ε_a, α_j)` for the orthonormal form, with `α_j = ε_j − ε_{j+1}`.
pub fn pairing(a: usize, j: usize) -> i64 {
    i64::from(a == j) - i64::from(a == j + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum UFamily {
    /// Torus part commutes and is invertible.
    Torus,
    /// `ω_i` twists `e_j`, `f_j`.
    OmegaTwist,
    /// `ω_i'` twists `e_j`, `f_j`.
    OmegaPrimeTwist,
    /// `[e_i, f_j]`.
    Commutator,
    /// Serre relations in the `e`'s.
    SerreE,
    /// Serre relations in the `f`'s.
    SerreF,
}

#[derive(Clone, Debug)]
pub struct URelationOutcome {
    pub family: UFamily,
    pub label: String,
    /// The relation's left side minus its right side, mapped into `A`.
    pub residual: AlgebraElement,
}

#[derive(Clone, Debug)]
pub struct URelationReport {
    pub n: usize,
    pub outcomes: Vec<URelationOutcome>,
}

impl URelationReport {
    pub fn all_zero(&self) -> bool {
        self.outcomes.iter().all(|o| o.residual.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &URelationOutcome> {
        self.outcomes.iter().filter(|o| !o.residual.is_zero())
    }

    pub fn count(&self, family: UFamily) -> usize {
        self.outcomes.iter().filter(|o| o.family == family).count()
    }
}

impl fmt::Display for URelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.failures().count();
        writeln!(f, "n = {}: {} relations, {} nonzero residuals", self.n, self.outcomes.len(), bad)?;
        for o in self.failures() {
            writeln!(f, "  {:?}: {} -> {}", o.family, o.label, o.residual)?;
        }
        Ok(())
    }
}

struct Images<'a> {
    a: &'a WeylAlgebra,
}

impl Images<'_> {
    fn of(&self, word: &[UGenerator]) -> AlgebraElement {
        u_word_image(self.a, word).expect("valid generators")
    }

    fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.a.multiply(x, y)
    }

    /// `[x, y]_q = xy − q yx`.
    fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement, q: &RationalScalar) -> AlgebraElement {
        self.mul(x, y).sub_ref(&self.mul(y, x).scale(q))
    }
}

fn rp(i: usize, e: i64) -> RationalScalar {
    RationalScalar::r_pow(i, e)
}

fn sp(i: usize, e: i64) -> RationalScalar {
    RationalScalar::s_pow(i, e)
}

/// The right side of `[e_i, f_i]`: `(ω_i^2 − (ω_i')^2) / (r_i^2 − s_i^2)`.
fn cartan_element(img: &Images<'_>, i: usize) -> AlgebraElement {
    let den = (rp(i, 2) - sp(i, 2)).inv().expect("r^2 - s^2 is nonzero");
    img.of(&[UGenerator::omega(i, 2)])
        .sub_ref(&img.of(&[UGenerator::omega_prime(i, 2)]))
        .scale(&den)
}

/// Every relation of `U_{r,s}(sl_n)` mapped into `A_{r,s}(n)`.
///
/// The second line of the `ω'`/`f` twist is read with `f_j` on both sides.
pub fn verify_u_relations(n: usize) -> Result<URelationReport, UqrsError> {
    if n < 2 {
        return Err(UqrsError::RankTooSmall(n));
    }
    let a = WeylAlgebra::new(n);
    let img = Images { a: &a };
    let one = AlgebraElement::one();
    let mut outcomes = Vec::new();
    let mut push = |family, label: String, residual| outcomes.push(URelationOutcome { family, label, residual });
    let idx: Vec<usize> = (1..n).collect();
    use UGenerator as U;

    // torus
    let mut torus = Vec::new();
    for &i in &idx {
        torus.push(U::omega(i, 1));
        torus.push(U::omega_prime(i, 1));
        torus.push(U::omega(i, -1));
        torus.push(U::omega_prime(i, -1));
    }
    for (p, g) in torus.iter().enumerate() {
        for h in &torus[p + 1..] {
            let res = img.of(&[*g, *h]).sub_ref(&img.of(&[*h, *g]));
            push(UFamily::Torus, format!("{g}*{h} = {h}*{g}"), res);
        }
    }
    for &i in &idx {
        for (g, h) in [
            (U::omega(i, 1), U::omega(i, -1)),
            (U::omega(i, -1), U::omega(i, 1)),
            (U::omega_prime(i, 1), U::omega_prime(i, -1)),
            (U::omega_prime(i, -1), U::omega_prime(i, 1)),
        ] {
            push(UFamily::Torus, format!("{g}*{h} = 1"), img.of(&[g, h]).sub_ref(&one));
        }
    }

    // twists of e_j, f_j
    for &i in &idx {
        for &j in &idx {
            let c_e = rp(i, pairing(i, j)) * sp(i + 1, pairing(i + 1, j));
            let c_e_prime = rp(i + 1, pairing(i + 1, j)) * sp(i, pairing(i, j));
            for (family, w, c) in [(UFamily::OmegaTwist, U::omega(i, 1), c_e), (UFamily::OmegaPrimeTwist, U::omega_prime(i, 1), c_e_prime)] {
                let cf = c.inv().expect("monomial");
                for (x, q) in [(U::e(j), &c), (U::f(j), &cf)] {
                    let res = img.of(&[w, x]).sub_ref(&img.of(&[x, w]).scale(q));
                    push(family, format!("{w}*{x} = ({q}) {x}*{w}"), res);
                }
            }
        }
    }

    // commutators
    for &i in &idx {
        for &j in &idx {
            let mut res = img.of(&[U::e(i), U::f(j)]).sub_ref(&img.of(&[U::f(j), U::e(i)]));
            if i == j {
                res = res.sub_ref(&cartan_element(&img, i));
            }
            push(UFamily::Commutator, format!("[e{i}, f{j}]"), res);
        }
    }

    // Serre relations
    for i in (1..n).filter(|&i| i + 1 < n) {
        let (e1, e2) = (img.of(&[U::e(i)]), img.of(&[U::e(i + 1)]));
        let (f1, f2) = (img.of(&[U::f(i)]), img.of(&[U::f(i + 1)]));
        let (r2, s2) = (rp(i + 1, 2), sp(i + 1, 2));
        let (r2i, s2i) = (rp(i + 1, -2), sp(i + 1, -2));
        let inner = img.bracket(&e1, &e2, &r2);
        push(UFamily::SerreE, format!("[e{i}, [e{i}, e{}]]", i + 1), img.bracket(&e1, &inner, &s2));
        push(UFamily::SerreE, format!("[[e{i}, e{}], e{}]", i + 1, i + 1), img.bracket(&inner, &e2, &s2));
        let inner = img.bracket(&f1, &f2, &r2i);
        push(UFamily::SerreF, format!("[f{i}, [f{i}, f{}]]", i + 1), img.bracket(&f1, &inner, &s2i));
        push(UFamily::SerreF, format!("[[f{i}, f{}], f{}]", i + 1, i + 1), img.bracket(&inner, &f2, &s2i));
    }
    Ok(URelationReport { n, outcomes })
}

/// Identify every `r_i` with `r_1` and every `s_i` with `s_1` in the
/// coefficients of `e`.
pub fn specialize_equal_parameters(e: &AlgebraElement) -> AlgebraElement {
    let collapse = |v: usize| if v.is_multiple_of(2) { r_var(1) } else { s_var(1) };
    e.map_coeffs(|_, c| c.remap_vars(collapse).expect("r_1^2 - s_1^2 stays nonzero"))
}

fn check_poly_vector(n: usize, v: &ModuleVector) -> Result<(), UqrsError> {
    let p = ModuleSpec::polynomial(n);
    v.terms().try_for_each(|(k, _)| p.check_index(k))?;
    Ok(())
}

fn apply_once(g: &UGenerator, k: &[i64]) -> Option<(RationalScalar, BasisIndex)> {
    let i = g.index;
    let p = i - 1;
    let step = |from: usize, to: usize, q: RationalScalar| {
        let mut out = k.to_vec();
        out[from] -= 1;
        out[to] += 1;
        (out[from] >= 0 && !q.is_zero()).then_some((q, out))
    };
    match g.kind {
        UKind::Omega => Some((rp(i, k[p]) * sp(i + 1, k[p + 1]), k.to_vec())),
        UKind::OmegaPrime => Some((rp(i + 1, k[p + 1]) * sp(i, k[p]), k.to_vec())),
        UKind::E => step(p + 1, p, quantum_integer(i + 1, k[p + 1])),
        UKind::F => step(p, p + 1, quantum_integer(i, k[p])),
    }
}

/// The displayed action of one generator on `P(n)`.
pub fn u_act(n: usize, g: &UGenerator, v: &ModuleVector) -> Result<ModuleVector, UqrsError> {
    g.validate(n)?;
    check_poly_vector(n, v)?;
    let unit = UGenerator { exponent: g.exponent.signum(), ..*g };
    let mut cur = v.clone();
    for _ in 0..g.exponent.unsigned_abs() {
        let mut next = ModuleVector::zero();
        for (k, c) in cur.terms() {
            if let Some((q, target)) = apply_once(&unit, k) {
                let q = if g.exponent < 0 { q.inv().expect("eigenvalues are nonzero") } else { q };
                next.add_term(target, c * &q);
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Act by a word of generators, rightmost first.
pub fn u_act_word(n: usize, word: &[UGenerator], v: &ModuleVector) -> Result<ModuleVector, UqrsError> {
    let mut cur = v.clone();
    for g in word.iter().rev() {
        cur = u_act(n, g, &cur)?;
    }
    Ok(cur)
}

/// The same action computed through `u_image` and the `A`-module `P(n)`.
pub fn u_act_via_image(a: &WeylAlgebra, word: &[UGenerator], v: &ModuleVector) -> Result<ModuleVector, UqrsError> {
    let e = u_word_image(a, word)?;
    Ok(act_element(&ModuleSpec::polynomial(a.rank()), &e, v)?)
}

/// Eigenvalues `(η, θ)` of `ω_i`, `ω_i'` on one vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UWeight {
    pub eta: Vec<RationalScalar>,
    pub theta: Vec<RationalScalar>,
}

/// The weight of `z(k)` in `P(n)`.
pub fn weight_of(k: &[i64]) -> UWeight {
    let n = k.len();
    let eta = (1..n).map(|i| rp(i, k[i - 1]) * sp(i + 1, k[i])).collect();
    let theta = (1..n).map(|i| rp(i + 1, k[i]) * sp(i, k[i - 1])).collect();
    UWeight { eta, theta }
}

/// Monomials of total degree `m` in `n` variables, lexicographically
/// decreasing (so `m ε_1` comes first).
pub fn degree_monomials(m: i64, n: usize) -> Vec<BasisIndex> {
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in degree_monomials(m - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComponentReport {
    pub m: i64,
    pub n: usize,
    pub monomials: usize,
    /// `e_i`, `f_i` map degree-`m` monomials to degree-`m` vectors.
    pub degree_preserved: bool,
    /// Every monomial reaches every other one under the `e_i`, `f_i`.
    pub connected: bool,
    /// `z(m ε_1)` is killed by every `e_i`.
    pub highest_killed: bool,
}

/// Desk-scale evidence that `P(n)_m` is a simple highest weight module.
pub fn graded_component_check(m: i64, n: usize) -> Result<GradedComponentReport, UqrsError> {
    if n < 2 {
        return Err(UqrsError::RankTooSmall(n));
    }
    let monos = degree_monomials(m, n);
    let gens: Vec<UGenerator> = (1..n).flat_map(|i| [UGenerator::e(i), UGenerator::f(i)]).collect();
    let mut degree_preserved = true;
    let mut edges: Vec<(BasisIndex, BasisIndex)> = Vec::new();
    for k in &monos {
        for g in &gens {
            let img = u_act(n, g, &ModuleVector::basis(k.clone()))?;
            for (t, _) in img.terms() {
                degree_preserved &= t.iter().sum::<i64>() == m;
                edges.push((k.clone(), t.clone()));
            }
        }
    }
    let reach = |from: &BasisIndex, forward: bool| -> BTreeSet<BasisIndex> {
        let mut seen = BTreeSet::from([from.clone()]);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(cur) = queue.pop_front() {
            for (a, b) in &edges {
                let (src, dst) = if forward { (a, b) } else { (b, a) };
                if *src == cur && seen.insert(dst.clone()) {
                    queue.push_back(dst.clone());
                }
            }
        }
        seen
    };
    let top = monos[0].clone();
    let connected = reach(&top, true).len() == monos.len() && reach(&top, false).len() == monos.len();
    let mut highest_killed = true;
    for i in 1..n {
        highest_killed &= u_act(n, &UGenerator::e(i), &ModuleVector::basis(top.clone()))?.is_zero();
    }
    Ok(GradedComponentReport { m, n, monomials: monos.len(), degree_preserved, connected, highest_killed })
}
