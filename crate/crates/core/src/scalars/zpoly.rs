//! Integer multivariate polynomials and their greatest common divisor.
//!
//! Only used behind [`RationalScalar`](super::RationalScalar) canonicalization.
//! All exponents here are nonnegative. The gcd first tries the heuristic
//! evaluate-and-interpolate method (every candidate is verified by exact
//! division); if that gives up, a main variable is selected, contents are
//! split off, and the primitive parts go through a primitive
//! pseudo-remainder sequence.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Exponents;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ZPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Exponents::one(), c);
        }
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = ZPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    fn add_term(&mut self, m: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m);
        match slot {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn lead(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        ZPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ZPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Exponents, c: &BigInt) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (k.add(m), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(&Exponents::one(), c)
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v / c)).collect(),
        }
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn int_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        match it.next() {
            None => Exponents::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.meet(m)),
        }
    }

    pub fn shift(&self, by: &Exponents) -> Self {
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (k.add(by), v.clone())).collect(),
        }
    }

    /// Sign-normalized copy: leading coefficient positive.
    pub fn normalized(self) -> Self {
        match self.lead() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    fn vars(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.support().map(|(v, _)| v).collect::<Vec<_>>())
            .collect()
    }

    fn degree_in(&self, v: usize) -> i32 {
        self.terms.keys().map(|m| m.get(v)).max().unwrap_or(0)
    }

    /// Coefficients with respect to `v`, indexed by degree.
    fn coeffs_in(&self, v: usize) -> Vec<ZPoly> {
        let mut out = vec![ZPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let d = m.get(v);
            let rest = m.sub(&Exponents::var(v, d));
            out[d as usize].add_term(rest, c.clone());
        }
        out
    }

    fn from_coeffs_in(v: usize, coeffs: &[ZPoly]) -> Self {
        let mut out = ZPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            let shift = Exponents::var(v, d as i32);
            for (m, x) in &c.terms {
                out.add_term(m.add(&shift), x.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d` over the integers, or `None` if `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let (dm, dc) = d.lead()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.terms.clone();
        let mut quo = ZPoly::zero();
        while let Some((m, c)) = rem.iter().next_back() {
            if !dm.le_all(m) {
                return None;
            }
            let (q, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = m.sub(&dm);
            for (k, v) in &d.terms {
                let key = k.add(&qm);
                let entry = rem.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= v * &q;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quo.add_term(qm, q);
        }
        Some(quo)
    }

    /// Substitute the integer `x` for the variable `v`.
    fn eval_at(&self, v: usize, x: &BigInt) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            let d = m.get(v);
            let rest = m.sub(&Exponents::var(v, d));
            out.add_term(rest, c * num_traits::pow(x.clone(), d as usize));
        }
        out
    }

    /// Largest absolute value of a coefficient.
    fn max_norm(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Greatest common divisor, normalized to a positive leading coefficient.
///
/// The integer content is included, so `gcd(6x, 4x) = 2x`.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.clone().normalized();
    }
    if b.is_zero() {
        return a.clone().normalized();
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let common = ma.meet(&mb);
    let a1 = a.shift(&ma.neg());
    let b1 = b.shift(&mb.neg());
    gcd_rec(&a1, &b1).shift(&common).normalized()
}

fn gcd_rec(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if let Some(c) = a.as_constant() {
        return ZPoly::constant(c.gcd(&b.int_content()));
    }
    if let Some(c) = b.as_constant() {
        return ZPoly::constant(c.gcd(&a.int_content()));
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.clone().normalized();
    }

    let va = a.vars();
    let vb = b.vars();
    // A variable present on one side only cannot occur in the gcd.
    if let Some(&v) = va.difference(&vb).next() {
        return gcd_with_coeffs(b, a, v);
    }
    if let Some(&v) = vb.difference(&va).next() {
        return gcd_with_coeffs(a, b, v);
    }
    if let Some(h) = heuristic_gcd(a, b, &va) {
        return h;
    }

    let v = *va
        .iter()
        .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-constant polynomial has a variable");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let p = primitive_prs(&pa, &pb, v);
    c.mul(&p).normalized()
}

/// Integer nearest to zero congruent to `c` modulo `m`.
fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

/// Recover a polynomial in `v` from its value `h` at `v = x`, reading the
/// coefficients as balanced base-`x` digits.
fn interpolate(mut h: ZPoly, v: usize, x: &BigInt) -> ZPoly {
    let mut out = ZPoly::zero();
    let mut d = 0;
    while !h.is_zero() {
        let digit = ZPoly::from_terms(
            h.terms.iter().map(|(m, c)| (m.clone(), symmetric_mod(c, x))),
        );
        let shift = Exponents::var(v, d);
        for (m, c) in &digit.terms {
            out.add_term(m.add(&shift), c.clone());
        }
        h = h.sub(&digit).div_int_exact(x);
        d += 1;
    }
    out
}

/// Heuristic gcd: evaluate one variable at a large integer, take the gcd of
/// the images recursively and read the answer back off in base `x`. The
/// evaluation point is kept above twice the smaller coefficient norm, which
/// makes a candidate that divides both inputs the true gcd.
fn heuristic_gcd(a: &ZPoly, b: &ZPoly, vars: &BTreeSet<usize>) -> Option<ZPoly> {
    let ca = a.int_content();
    let cb = b.int_content();
    let content = ca.gcd(&cb);
    let a = a.div_int_exact(&ca);
    let b = b.div_int_exact(&cb);
    let v = *vars
        .iter()
        .max_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))?;
    let norm = a.max_norm().min(b.max_norm());
    let mut x: BigInt = BigInt::from(2) * norm + 29;
    for _ in 0..6 {
        let fa = a.eval_at(v, &x);
        let fb = b.eval_at(v, &x);
        if !fa.is_zero() && !fb.is_zero() {
            let h = interpolate(gcd_rec(&fa, &fb), v, &x);
            if !h.is_zero() {
                let hc = h.int_content();
                let h = h.div_int_exact(&hc).normalized();
                if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                    return Some(h.scale(&content));
                }
            }
        }
        x = BigInt::from(73794) * &x * x.sqrt().sqrt() / 27011;
    }
    None
}

/// gcd of `g` with all `v`-coefficients of `p`.
fn gcd_with_coeffs(g: &ZPoly, p: &ZPoly, v: usize) -> ZPoly {
    let mut acc = g.clone();
    for c in p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()) {
        acc = gcd_rec(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc.normalized()
}

fn content_in(p: &ZPoly, v: usize) -> ZPoly {
    let mut coeffs = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero());
    let first = coeffs.next().expect("nonzero polynomial");
    let mut acc = first.normalized();
    for c in coeffs {
        if acc.is_one() {
            break;
        }
        acc = gcd_rec(&acc, &c);
    }
    acc.normalized()
}

fn trim(u: &mut Vec<ZPoly>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn pseudo_rem(f: &[ZPoly], g: &[ZPoly]) -> Vec<ZPoly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lg);
        }
        for (i, gc) in g.iter().enumerate() {
            let k = i + dr - dg;
            r[k] = r[k].sub(&lr.mul(gc));
        }
        trim(&mut r);
    }
    r
}

fn primitive_part(u: Vec<ZPoly>) -> Vec<ZPoly> {
    let mut iter = u.iter().filter(|c| !c.is_zero());
    let mut cont = iter.next().expect("nonzero").clone().normalized();
    for c in iter {
        if cont.is_one() {
            break;
        }
        cont = gcd_rec(&cont, c);
    }
    if let Some((_, lc)) = u.last().and_then(|c| c.lead()) {
        if lc.is_negative() {
            cont = cont.neg();
        }
    }
    u.into_iter()
        .map(|c| c.div_exact(&cont).expect("content divides"))
        .collect()
}

/// gcd of two polynomials that are primitive with respect to `v`.
fn primitive_prs(a: &ZPoly, b: &ZPoly, v: usize) -> ZPoly {
    let (mut f, mut g) = {
        let fa = a.coeffs_in(v);
        let fb = b.coeffs_in(v);
        if fa.len() >= fb.len() {
            (fa, fb)
        } else {
            (fb, fa)
        }
    };
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            return ZPoly::from_coeffs_in(v, &g).normalized();
        }
        if r.len() == 1 {
            return ZPoly::one();
        }
        f = g;
        g = primitive_part(r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::monomial::{r_var, s_var};

    impl ZPoly {
        fn add_const(&self, c: i64) -> ZPoly {
            self.sub(&ZPoly::constant(BigInt::from(-c)))
        }
    }

    fn p(terms: &[(&[i32], i64)]) -> ZPoly {
        ZPoly::from_terms(
            terms
                .iter()
                .map(|(e, c)| (Exponents::from_vec(e.to_vec()), BigInt::from(*c))),
        )
    }

    #[test]
    fn gcd_of_difference_of_squares_and_its_factor() {
        // r^4 - s^4 and r^2 - s^2
        let a = p(&[(&[4, 0], 1), (&[0, 4], -1)]);
        let b = p(&[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(gcd(&a, &b), b);
    }

    #[test]
    fn gcd_finds_hidden_common_factor() {
        // (r + s)(r - 2s) and (r + s)(r^2 + s)
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let a = f.mul(&p(&[(&[1, 0], 1), (&[0, 1], -2)]));
        let b = f.mul(&p(&[(&[2, 0], 1), (&[0, 1], 1)]));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[(&[1], 6)]);
        let b = p(&[(&[1], 4)]);
        assert_eq!(gcd(&a, &b), p(&[(&[1], 2)]));
    }

    #[test]
    fn coprime_in_several_variables() {
        let mut e1 = vec![0; 4];
        e1[r_var(2)] = 2;
        let mut e2 = vec![0; 4];
        e2[s_var(2)] = 2;
        let a = p(&[(&e1, 1), (&e2, -1)]);
        let b = p(&[(&[2, 0], 1), (&[0, 2], -1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_detects_nondivisibility() {
        let a = p(&[(&[2, 0], 1), (&[0, 2], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(a.div_exact(&b).is_none());
        let sq = b.mul(&b);
        assert_eq!(sq.div_exact(&b), Some(b));
    }

    #[test]
    fn heuristic_and_prs_agree_in_four_variables() {
        // f = r1 s2 + 3 r2 - s1^2, contaminated by different cofactors
        let f = p(&[(&[1, 0, 0, 1], 1), (&[0, 0, 1], 3), (&[0, 2], -1)]);
        let u = p(&[(&[2, 0, 0, 0], 1), (&[0, 1, 1], -5), (&[], 7)]);
        let w = p(&[(&[0, 0, 0, 3], 2), (&[1, 1], 1), (&[], -1)]);
        let a = f.mul(&u).mul(&u);
        let b = f.mul(&w).mul(&u.add_const(1));
        let vars = a.vars();
        let heu = heuristic_gcd(&a, &b, &vars).expect("heuristic succeeds");
        assert_eq!(heu, f.clone().normalized());
        let va = a.vars().into_iter().next().unwrap();
        let prs = primitive_prs(&a, &b, va);
        assert_eq!(prs, heu);
    }
}
