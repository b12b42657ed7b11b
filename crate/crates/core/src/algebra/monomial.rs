//! Normal-form basis monomials `prod_i rho_i^a sigma_i^b x_i^u y_i^v`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::generator::{GeneratorSymbol, Word};

/// The exponents carried by one index. Field order fixes the term order:
/// `u` (x), then `v` (y), then `a` (rho), then `b` (sigma).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexPart {
    pub x: u32,
    pub y: u32,
    pub rho: i64,
    pub sigma: i64,
}

impl IndexPart {
    pub fn is_trivial(&self) -> bool {
        *self == IndexPart::default()
    }
}

/// A basis monomial. At most one of `x_i`, `y_i` appears per index.
///
/// Stored with trailing trivial indices trimmed; comparison pads with
/// trivial parts, so monomials from different ranks compare consistently.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalMonomial {
    parts: Vec<IndexPart>,
}

impl NormalMonomial {
    pub fn one() -> Self {
        NormalMonomial::default()
    }

    /// Build from per-index parts (position 0 is index 1).
    ///
    /// # Panics
    /// If some index carries both `x` and `y`.
    pub fn from_parts(mut parts: Vec<IndexPart>) -> Self {
        assert!(
            parts.iter().all(|p| p.x == 0 || p.y == 0),
            "normal monomials carry x_i or y_i, not both"
        );
        while parts.last().is_some_and(IndexPart::is_trivial) {
            parts.pop();
        }
        NormalMonomial { parts }
    }

    pub fn part(&self, i: usize) -> IndexPart {
        self.parts.get(i - 1).copied().unwrap_or_default()
    }

    pub fn with_part(&self, i: usize, p: IndexPart) -> Self {
        let mut parts = self.parts.clone();
        if parts.len() < i {
            parts.resize(i, IndexPart::default());
        }
        parts[i - 1] = p;
        NormalMonomial::from_parts(parts)
    }

    pub fn torus(rho: &[i64], sigma: &[i64]) -> Self {
        let n = rho.len().max(sigma.len());
        NormalMonomial::from_parts(
            (0..n)
                .map(|k| IndexPart {
                    rho: rho.get(k).copied().unwrap_or(0),
                    sigma: sigma.get(k).copied().unwrap_or(0),
                    ..IndexPart::default()
                })
                .collect(),
        )
    }

    pub fn rho(i: usize, e: i64) -> Self {
        NormalMonomial::one().with_part(i, IndexPart { rho: e, ..IndexPart::default() })
    }

    pub fn sigma(i: usize, e: i64) -> Self {
        NormalMonomial::one().with_part(i, IndexPart { sigma: e, ..IndexPart::default() })
    }

    pub fn x(i: usize, u: u32) -> Self {
        NormalMonomial::one().with_part(i, IndexPart { x: u, ..IndexPart::default() })
    }

    pub fn y(i: usize, v: u32) -> Self {
        NormalMonomial::one().with_part(i, IndexPart { y: v, ..IndexPart::default() })
    }

    pub fn is_one(&self) -> bool {
        self.parts.is_empty()
    }

    /// Highest index with a nontrivial part.
    pub fn width(&self) -> usize {
        self.parts.len()
    }

    /// Indexed nontrivial parts, 1-based.
    pub fn parts(&self) -> impl Iterator<Item = (usize, IndexPart)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_trivial())
            .map(|(k, p)| (k + 1, *p))
    }

    /// True when no `x` or `y` factor is present.
    pub fn is_torus(&self) -> bool {
        self.parts.iter().all(|p| p.x == 0 && p.y == 0)
    }

    /// The `x`-degree minus `y`-degree at index `i`.
    pub fn degree(&self, i: usize) -> i64 {
        let p = self.part(i);
        p.x as i64 - p.y as i64
    }

    /// Product of two torus-only monomials, or of a torus monomial with
    /// anything on its right, as exponent addition.
    pub(crate) fn torus_mul(&self, other: &NormalMonomial) -> NormalMonomial {
        debug_assert!(self.is_torus());
        let w = self.width().max(other.width());
        NormalMonomial::from_parts(
            (1..=w)
                .map(|i| {
                    let (a, b) = (self.part(i), other.part(i));
                    IndexPart { rho: a.rho + b.rho, sigma: a.sigma + b.sigma, ..b }
                })
                .collect(),
        )
    }

    /// The same monomial with its `x`/`y` part removed.
    pub fn torus_part(&self) -> NormalMonomial {
        NormalMonomial::from_parts(
            self.parts
                .iter()
                .map(|p| IndexPart { x: 0, y: 0, ..*p })
                .collect(),
        )
    }

    /// Expansion as a word: all torus factors first, ordered by index with
    /// `rho` before `sigma`, then `x_i^u` or `y_i^v` by index.
    pub fn to_word(&self) -> Word {
        let mut w = Vec::new();
        for (i, p) in self.parts() {
            if p.rho != 0 {
                w.push(GeneratorSymbol::rho(i, p.rho));
            }
            if p.sigma != 0 {
                w.push(GeneratorSymbol::sigma(i, p.sigma));
            }
        }
        for (i, p) in self.parts() {
            w.extend((0..p.x).map(|_| GeneratorSymbol::x(i)));
            w.extend((0..p.y).map(|_| GeneratorSymbol::y(i)));
        }
        Word(w)
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let w = self.width().max(other.width());
        (1..=w)
            .map(|i| self.part(i).cmp(&other.part(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.parts() {
            let mut put = |f: &mut fmt::Formatter<'_>, name: &str, e: i64| -> fmt::Result {
                if e == 0 {
                    return Ok(());
                }
                if !first {
                    f.write_str(" * ")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{name}{i}")
                } else {
                    write!(f, "{name}{i}^{e}")
                }
            };
            put(f, "rho", p.rho)?;
            put(f, "sigma", p.sigma)?;
            put(f, "x", p.x as i64)?;
            put(f, "y", p.y as i64)?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
