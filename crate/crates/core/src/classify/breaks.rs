//! Breaks along a `Φ`-orbit of maximal ideals of the torus algebra.
//!
//! The ideal `⟨ρ_i − μ_i, σ_i − ν_i⟩` is stored by its coordinates. The
//! automorphism `φ_j` moves it to `⟨ρ_j − r_j μ_j, σ_j − s_j ν_j⟩` at index
//! `j`, and the ideal has a break at `j` when `t_j` lies in it, which happens
//! exactly when `ν_j = ±(r_j/s_j) μ_j`.

use num_traits::One;

use crate::scalars::{r_var, ratio_as_signed_power, s_var, RationalScalar};

use super::ClassifyError;

/// Coordinates `(μ, ν)` of a maximal ideal; every entry is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCoordinates {
    mu: Vec<RationalScalar>,
    nu: Vec<RationalScalar>,
}

impl IdealCoordinates {
    pub fn new(mu: Vec<RationalScalar>, nu: Vec<RationalScalar>) -> Result<Self, ClassifyError> {
        if mu.is_empty() || mu.len() != nu.len() {
            return Err(ClassifyError::Shape { mu: mu.len(), nu: nu.len() });
        }
        for (name, v) in [("mu", &mu), ("nu", &nu)] {
            if let Some(i) = v.iter().position(RationalScalar::is_zero) {
                return Err(ClassifyError::ZeroCoordinate { name, index: i + 1 });
            }
        }
        Ok(IdealCoordinates { mu, nu })
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[RationalScalar] {
        &self.mu
    }

    pub fn nu(&self) -> &[RationalScalar] {
        &self.nu
    }

    /// `φ_1^{k_1} ⋯ φ_n^{k_n}` applied to the ideal.
    pub fn shifted(&self, k: &[i64]) -> Self {
        assert_eq!(k.len(), self.rank(), "shift length must equal the rank");
        let mu = self
            .mu
            .iter()
            .zip(k)
            .enumerate()
            .map(|(p, (m, &e))| m * &RationalScalar::r_pow(p + 1, e))
            .collect();
        let nu = self
            .nu
            .iter()
            .zip(k)
            .enumerate()
            .map(|(p, (v, &e))| v * &RationalScalar::s_pow(p + 1, e))
            .collect();
        IdealCoordinates { mu, nu }
    }

    /// `(sign, m)` with `ν_j / μ_j = sign · (r_j/s_j)^m`, if such exist.
    fn signed_power(&self, j: usize) -> Option<(i32, i64)> {
        let ratio = self.nu[j - 1].checked_div(&self.mu[j - 1]).expect("nonzero coordinates");
        ratio_as_signed_power(&ratio, j).expect("nonzero ratio")
    }

    /// Whether `t_j` lies in this ideal.
    pub fn has_break_at(&self, j: usize) -> bool {
        self.signed_power(j).is_some_and(|(_, m)| m == 1)
    }

    /// Indices `j` where `t_j` lies in this ideal.
    pub fn breaks(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&j| self.has_break_at(j)).collect()
    }
}

/// One index of the break set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakInfo {
    pub index: usize,
    /// `φ_j^{shift}` of the input ideal has a break at `j`.
    pub shift: i64,
    /// The sign in `ν_j = sign · (r_j/s_j)^{shift+1} μ_j`.
    pub sign: i32,
}

/// The break set `J` of an orbit together with the designated ideal, which
/// has a break at every `j ∈ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakReport {
    pub input: IdealCoordinates,
    pub breaks: Vec<BreakInfo>,
    pub designated: IdealCoordinates,
}

impl BreakReport {
    /// The indices in `J`, increasing.
    pub fn set(&self) -> Vec<usize> {
        self.breaks.iter().map(|b| b.index).collect()
    }

    pub fn size(&self) -> usize {
        self.breaks.len()
    }

    /// Position of `φ^k(input)` measured from the designated ideal.
    pub fn offset_from_designated(&self, k: &[i64]) -> Vec<i64> {
        let mut out = k.to_vec();
        for b in &self.breaks {
            out[b.index - 1] -= b.shift;
        }
        out
    }

    /// The class `α ∈ {0,1}^J` containing `φ^k(input)`. At a break index the
    /// class is `0` for offsets `≤ 0` and `1` for offsets `≥ 1`.
    pub fn class_of_shift(&self, k: &[i64]) -> Vec<bool> {
        let off = self.offset_from_designated(k);
        self.breaks.iter().map(|b| off[b.index - 1] >= 1).collect()
    }
}

/// Find the break set of the orbit of `c` and its designated ideal
/// `φ_j^{p_j}(c)`, `j ∈ J`.
pub fn detect_breaks(c: &IdealCoordinates) -> BreakReport {
    let mut breaks = Vec::new();
    let mut shift = vec![0; c.rank()];
    for j in 1..=c.rank() {
        if let Some((sign, m)) = c.signed_power(j) {
            breaks.push(BreakInfo { index: j, shift: m - 1, sign });
            shift[j - 1] = m - 1;
        }
    }
    BreakReport { input: c.clone(), designated: c.shifted(&shift), breaks }
}

/// The shift `k` with `c2 = φ^k(c1)`, if the two ideals share an orbit.
pub fn orbit_shift(c1: &IdealCoordinates, c2: &IdealCoordinates) -> Option<Vec<i64>> {
    if c1.rank() != c2.rank() {
        return None;
    }
    let exponent = |a: &RationalScalar, b: &RationalScalar, slot: usize| -> Option<i64> {
        let q = b.checked_div(a).ok()?;
        if q.is_one() {
            return Some(0);
        }
        let (m, c) = q.as_monomial()?;
        let mut support = m.support();
        let (v, e) = support.next()?;
        (c.is_one() && v == slot && support.next().is_none()).then_some(e as i64)
    };
    (1..=c1.rank())
        .map(|i| {
            let p = i - 1;
            let kr = exponent(&c1.mu[p], &c2.mu[p], r_var(i))?;
            let ks = exponent(&c1.nu[p], &c2.nu[p], s_var(i))?;
            (kr == ks).then_some(kr)
        })
        .collect()
}

/// Whether `c1` and `c2` are isomorphic objects: they lie in one orbit and
/// the walk between them crosses no break.
pub fn equivalence_check(c1: &IdealCoordinates, c2: &IdealCoordinates) -> Result<bool, ClassifyError> {
    let k = orbit_shift(c1, c2).ok_or(ClassifyError::NotSameOrbit)?;
    let report = detect_breaks(c1);
    Ok(report.class_of_shift(&vec![0; c1.rank()]) == report.class_of_shift(&k))
}
