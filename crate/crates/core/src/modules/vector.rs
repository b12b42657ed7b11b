//! Finitely supported vectors and finite index windows.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::RationalScalar;

pub type BasisIndex = Vec<i64>;

/// A finite linear combination of basis vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    terms: BTreeMap<BasisIndex, RationalScalar>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(k: BasisIndex) -> Self {
        ModuleVector::term(k, RationalScalar::one())
    }

    pub fn term(k: BasisIndex, c: RationalScalar) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms(it: impl IntoIterator<Item = (BasisIndex, RationalScalar)>) -> Self {
        let mut v = ModuleVector::zero();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, k: BasisIndex, c: RationalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &RationalScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &[i64]) -> RationalScalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        ModuleVector::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, (k, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                f.write_str(" + ")?;
            }
            let idx: Vec<String> = k.iter().map(i64::to_string).collect();
            if c.is_one() {
                write!(f, "[{}]", idx.join(","))?;
            } else {
                write!(f, "({c}) * [{}]", idx.join(","))?;
            }
        }
        Ok(())
    }
}

/// The window `lo[i] <= k[i] <= hi[i]` of basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl BasisBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len(), "box bounds must have equal length");
        BasisBox { lo, hi }
    }

    /// `|k_i| <= radius` in `dim` coordinates.
    pub fn cube(dim: usize, radius: i64) -> Self {
        BasisBox::new(vec![-radius; dim], vec![radius; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        k.len() == self.dim() && k.iter().zip(self.lo.iter().zip(&self.hi)).all(|(c, (l, h))| l <= c && c <= h)
    }

    /// All indices in the window, in lexicographic order.
    pub fn points(&self) -> Vec<BasisIndex> {
        let mut out = vec![vec![]];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (*l..=*h).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }
}
