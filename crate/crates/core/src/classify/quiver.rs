//! The skeleton quiver with relations attached to a break set `J`.
//!
//! Objects are `α ∈ {0,1}^q`, `q = |J|`. For each `j ∈ J` and each object
//! with `α_j = 0` there is an arrow `a` to `α + ε_j` and an arrow `b` back.
//! Relations: `ab = ba = 0` at one index, and arrows at distinct indices
//! commute. The algebra is the `q`-fold tensor power of the four
//! dimensional algebra of one such pair, which is how it is realized here.

use serde::Serialize;

use super::simples::alphas;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    A,
    B,
}

/// An arrow between objects, identified by the break index it changes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub kind: ArrowKind,
    /// The break index `j ∈ J`.
    pub index: usize,
    #[serde(skip)]
    pub position: usize,
    #[serde(serialize_with = "ser_bits")]
    pub source: Vec<bool>,
    #[serde(serialize_with = "ser_bits")]
    pub target: Vec<bool>,
}

impl Arrow {
    pub fn name(&self) -> String {
        let k = match self.kind {
            ArrowKind::A => "a",
            ArrowKind::B => "b",
        };
        format!("{k}{}", self.index)
    }
}

/// A relation between paths of length two, written `second ∘ first`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum QuiverRelation {
    /// `second ∘ first = 0`.
    Zero { first: usize, second: usize },
    /// `second ∘ first = other_second ∘ other_first`.
    Commute { first: usize, second: usize, other_first: usize, other_second: usize },
}

/// Objects, arrows and relations of the skeleton for `J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverPresentation {
    pub breaks: Vec<usize>,
    #[serde(serialize_with = "ser_bits_list")]
    pub objects: Vec<Vec<bool>>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<QuiverRelation>,
}

pub fn bits(a: &[bool]) -> String {
    if a.is_empty() {
        return "ω".to_string();
    }
    a.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn ser_bits<S: serde::Serializer>(a: &[bool], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&bits(a))
}

fn ser_bits_list<S: serde::Serializer>(a: &[Vec<bool>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(a.iter().map(|x| bits(x)))
}

/// Build the presentation for the break set `J` (any order; duplicates are
/// removed).
pub fn skeleton(breaks: &[usize]) -> QuiverPresentation {
    let mut breaks = breaks.to_vec();
    breaks.sort_unstable();
    breaks.dedup();
    let q = breaks.len();
    let objects = alphas(q);
    let mut arrows = Vec::new();
    for (t, &j) in breaks.iter().enumerate() {
        for alpha in objects.iter().filter(|a| !a[t]) {
            let mut beta = alpha.clone();
            beta[t] = true;
            arrows.push(Arrow { kind: ArrowKind::A, index: j, position: t, source: alpha.clone(), target: beta.clone() });
            arrows.push(Arrow { kind: ArrowKind::B, index: j, position: t, source: beta, target: alpha.clone() });
        }
    }
    let find = |kind: ArrowKind, t: usize, source: &[bool]| {
        arrows
            .iter()
            .position(|a| a.kind == kind && a.position == t && a.source == source)
            .expect("arrow exists")
    };
    let mut relations = Vec::new();
    for (id, ar) in arrows.iter().enumerate() {
        // a then b, b then a
        let back_kind = match ar.kind {
            ArrowKind::A => ArrowKind::B,
            ArrowKind::B => ArrowKind::A,
        };
        relations.push(QuiverRelation::Zero { first: id, second: find(back_kind, ar.position, &ar.target) });
        // distinct indices: ar then other equals other then ar
        for u in (0..q).filter(|&u| u > ar.position) {
            let other_kind = if ar.target[u] { ArrowKind::B } else { ArrowKind::A };
            let second = find(other_kind, u, &ar.target);
            let other_first = find(other_kind, u, &ar.source);
            let other_second = find(ar.kind, ar.position, &arrows[other_first].target);
            relations.push(QuiverRelation::Commute { first: id, second, other_first, other_second });
        }
    }
    QuiverPresentation { breaks, objects, arrows, relations }
}

impl QuiverPresentation {
    pub fn size(&self) -> usize {
        self.breaks.len()
    }

    /// Number of nonzero paths: from each object, each index either stays
    /// or is crossed once.
    pub fn path_count(&self) -> usize {
        self.objects.len() << self.size()
    }

    /// Graphviz rendering: nodes labeled by `α`, edges by arrow names.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph skeleton {\n");
        for o in &self.objects {
            out.push_str(&format!("  \"{0}\" [label=\"{0}\"];\n", bits(o)));
        }
        for a in &self.arrows {
            out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", bits(&a.source), bits(&a.target), a.name()));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["dimension"] = serde_json::json!(self.path_count());
        v
    }
}

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub dim: usize,
    pub entries: Vec<i64>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix { dim, entries: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = 1;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a != 0 {
                    for j in 0..d {
                        out.entries[i * d + j] += a * other.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (self.dim, other.dim);
        let d = p * q;
        let mut out = Matrix::zero(d);
        for i in 0..p {
            for j in 0..p {
                let a = self.get(i, j);
                if a != 0 {
                    for k in 0..q {
                        for l in 0..q {
                            out.entries[(i * q + k) * d + j * q + l] = a * other.get(k, l);
                        }
                    }
                }
            }
        }
        out
    }
}

// Basis of the one-pair algebra: e0, e1, a (0 -> 1), b (1 -> 0).
const E0: usize = 0;
const E1: usize = 1;
const PA: usize = 2;
const PB: usize = 3;

/// Product `x ∘ y` (first `y`, then `x`) in the one-pair algebra.
fn pair_product(x: usize, y: usize) -> Option<usize> {
    match (x, y) {
        (E0, E0) => Some(E0),
        (E1, E1) => Some(E1),
        (PA, E0) | (E1, PA) => Some(PA),
        (PB, E1) | (E0, PB) => Some(PB),
        _ => None,
    }
}

/// Left multiplication by a basis element in the regular representation.
fn pair_left(x: usize) -> Matrix {
    let mut m = Matrix::zero(4);
    for y in 0..4 {
        if let Some(z) = pair_product(x, y) {
            m.entries[z * 4 + y] = 1;
        }
    }
    m
}

/// The skeleton algebra through its regular representation, built as a
/// Kronecker product of one-pair factors.
#[derive(Clone, Debug)]
pub struct SkeletonAlgebra {
    pub presentation: QuiverPresentation,
    pub idempotents: Vec<Matrix>,
    pub arrows: Vec<Matrix>,
}

impl SkeletonAlgebra {
    pub fn new(presentation: QuiverPresentation) -> Self {
        let tensor = |factors: Vec<usize>| -> Matrix {
            factors.into_iter().fold(Matrix::identity(1), |acc, x| acc.kron(&pair_left(x)))
        };
        let idem = |alpha: &[bool]| alpha.iter().map(|&a| if a { E1 } else { E0 }).collect::<Vec<_>>();
        let idempotents = presentation.objects.iter().map(|o| tensor(idem(o))).collect();
        let arrows = presentation
            .arrows
            .iter()
            .map(|a| {
                let mut f = idem(&a.source);
                f[a.position] = match a.kind {
                    ArrowKind::A => PA,
                    ArrowKind::B => PB,
                };
                tensor(f)
            })
            .collect();
        SkeletonAlgebra { presentation, idempotents, arrows }
    }

    /// Composite `second ∘ first` of two arrows.
    pub fn compose(&self, first: usize, second: usize) -> Matrix {
        self.arrows[second].mul(&self.arrows[first])
    }

    /// Every relation holds for the arrow matrices.
    pub fn relations_hold(&self) -> bool {
        self.presentation.relations.iter().all(|r| match *r {
            QuiverRelation::Zero { first, second } => self.compose(first, second).is_zero(),
            QuiverRelation::Commute { first, second, other_first, other_second } => {
                self.compose(first, second) == self.compose(other_first, other_second)
            }
        })
    }

    /// Dimension of the span of all products of idempotents and arrows.
    ///
    /// Computed modulo a prime. The faithful representation bounds the
    /// rational rank by the path count, and the rank modulo a prime never
    /// exceeds the rational rank, so agreement with the path count is exact.
    pub fn dimension(&self) -> usize {
        let mut span = ModSpan::default();
        let mut frontier: Vec<Matrix> = self.idempotents.clone();
        for m in &frontier {
            span.insert(m);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for g in &self.arrows {
                    let p = g.mul(m);
                    if span.insert(&p) {
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        span.rows.len()
    }
}

const PRIME: i128 = (1 << 61) - 1;

/// Incremental row echelon form over `Z/p`.
#[derive(Default)]
struct ModSpan {
    rows: Vec<(usize, Vec<i128>)>,
}

fn inv_mod(a: i128) -> i128 {
    let (mut base, mut e, mut acc) = (a.rem_euclid(PRIME), PRIME - 2, 1i128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % PRIME;
        }
        base = base * base % PRIME;
        e >>= 1;
    }
    acc
}

impl ModSpan {
    /// Add `m` to the span; returns whether the rank grew.
    fn insert(&mut self, m: &Matrix) -> bool {
        let mut v: Vec<i128> = m.entries.iter().map(|&x| (x as i128).rem_euclid(PRIME)).collect();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x - c * r).rem_euclid(PRIME);
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pivot]);
        for x in v.iter_mut() {
            *x = *x * inv % PRIME;
        }
        self.rows.push((pivot, v));
        true
    }
}

/// A one-dimensional simple module of the skeleton: `K` at one object,
/// zero elsewhere, every arrow acting by zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverSimple {
    #[serde(serialize_with = "ser_bits")]
    pub vertex: Vec<bool>,
    pub dimension_vector: Vec<usize>,
}

/// The `2^q` simple modules `S_α`.
pub fn quiver_simples(q: usize) -> Vec<QuiverSimple> {
    let objects = alphas(q);
    objects
        .iter()
        .map(|v| QuiverSimple {
            vertex: v.clone(),
            dimension_vector: objects.iter().map(|o| usize::from(o == v)).collect(),
        })
        .collect()
}
