//! Finite linear combinations of normal monomials.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalars::RationalScalar;

use super::monomial::NormalMonomial;

/// An element of the algebra in normal form. Iteration follows the
/// monomial order; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<NormalMonomial, RationalScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::monomial(NormalMonomial::one())
    }

    pub fn scalar(c: RationalScalar) -> Self {
        AlgebraElement::term(NormalMonomial::one(), c)
    }

    pub fn monomial(m: NormalMonomial) -> Self {
        AlgebraElement::term(m, RationalScalar::one())
    }

    pub fn term(m: NormalMonomial, c: RationalScalar) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (NormalMonomial, RationalScalar)>) -> Self {
        let mut e = AlgebraElement::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: RationalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalMonomial, &RationalScalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> RationalScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient, if the element is a scalar multiple of 1.
    pub fn as_scalar(&self) -> Option<RationalScalar> {
        match self.terms.len() {
            0 => Some(RationalScalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Apply `f` to every coefficient, keeping monomials.
    pub fn map_coeffs(&self, f: impl Fn(&NormalMonomial, &RationalScalar) -> RationalScalar) -> Self {
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// Highest index appearing in any monomial.
    pub fn width(&self) -> usize {
        self.terms.keys().map(NormalMonomial::width).max().unwrap_or(0)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        self.add_ref(&rhs)
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.add_ref(rhs)
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        self.sub_ref(&rhs)
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.sub_ref(rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&RationalScalar::from_int(-1))
    }
}

impl From<NormalMonomial> for AlgebraElement {
    fn from(m: NormalMonomial) -> Self {
        AlgebraElement::monomial(m)
    }
}

/// Whether a coefficient can be printed bare in front of `*`.
fn coeff_is_bare(c: &RationalScalar) -> bool {
    c.as_rational()
        .is_some_and(|q| q.is_integer() && q > num_rational::BigRational::from_integer(0.into()))
}

impl fmt::Display for AlgebraElement {
    /// Terms joined by ` + `; a coefficient of 1 is omitted, positive
    /// integers print bare, anything else is parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                if coeff_is_bare(c) {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "({c})")?;
                }
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if coeff_is_bare(c) {
                write!(f, "{c} * {m}")?;
            } else {
                write!(f, "({c}) * {m}")?;
            }
        }
        Ok(())
    }
}
