//! Sparse Laurent polynomials with rational coefficients in the parameters.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Exponents;
use super::zpoly::ZPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::monomial(Exponents::one(), c)
    }

    pub fn monomial(m: Exponents, c: BigRational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
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

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn shift(&self, by: &Exponents) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.add(by), v.clone())).collect(),
        }
    }

    pub fn remap_vars(&self, f: &impl Fn(usize) -> usize) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.remap(f), c.clone())))
    }

    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        match it.next() {
            None => Exponents::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.meet(m)),
        }
    }

    /// Split `self = unit * x^shift * prim`, where `prim` has coprime integer
    /// coefficients, a positive leading coefficient and no monomial factor.
    pub(crate) fn to_primitive(&self) -> (BigRational, Exponents, ZPoly) {
        assert!(!self.is_zero(), "zero has no primitive part");
        let shift = self.min_exponents();
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<(Exponents, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.sub(&shift), (c * &lcm).to_integer()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let lead_negative = ints.last().is_some_and(|(_, c)| c.is_negative());
        let content = if lead_negative { -content } else { content };
        let prim = ZPoly::from_terms(ints.into_iter().map(|(m, c)| (m, c / &content)));
        let unit = BigRational::new(content, lcm);
        (unit, shift, prim)
    }

    pub(crate) fn from_zpoly(p: &ZPoly) -> Self {
        LaurentPoly::from_terms(
            p.terms()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))),
        )
    }
}

fn fmt_coeff_magnitude(c: &BigRational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending order. The output reparses under the expression
    /// grammar; a leading `-` is never followed by `name^e` directly since
    /// unary minus binds tighter than `^` there.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let unit = c.abs().is_one();
            let body = if m.is_one() {
                fmt_coeff_magnitude(c)
            } else if unit {
                m.to_string()
            } else {
                format!("{}*{}", fmt_coeff_magnitude(c), m)
            };
            if k == 0 {
                if neg {
                    let first_has_power = m.support().next().is_some_and(|(_, e)| e != 1);
                    if unit && !m.is_one() && first_has_power {
                        write!(f, "-({body})")?;
                    } else {
                        write!(f, "-{body}")?;
                    }
                } else {
                    f.write_str(&body)?;
                }
            } else if neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::monomial::{r_var, s_var};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn display_is_descending_and_safe() {
        let p = LaurentPoly::from_terms([
            (Exponents::var(r_var(1), 2), q(1)),
            (Exponents::var(s_var(1), 2), q(-1)),
        ]);
        assert_eq!(p.to_string(), "r1^2 - s1^2");
        assert_eq!(p.neg().to_string(), "-(r1^2) + s1^2");
        let c = LaurentPoly::monomial(Exponents::var(s_var(2), -1), BigRational::new(3.into(), 2.into()));
        assert_eq!(c.to_string(), "3/2*s2^-1");
    }

    #[test]
    fn primitive_split_roundtrips() {
        let p = LaurentPoly::from_terms([
            (Exponents::from_vec(vec![1, -1]), BigRational::new((-3).into(), 4.into())),
            (Exponents::from_vec(vec![3, -1]), BigRational::new(9.into(), 2.into())),
        ]);
        let (unit, shift, prim) = p.to_primitive();
        let back = LaurentPoly::from_zpoly(&prim).shift(&shift).scale(&unit);
        assert_eq!(back, p);
        assert!(prim.lead().unwrap().1.is_positive());
        assert!(prim.min_exponents().is_one());
    }
}
