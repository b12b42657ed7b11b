//! The generalized Weyl algebra `D(φ, t)` over the Laurent ring
//! `D = K[rho_i^{±1}, sigma_i^{±1}]`, implemented directly from its
//! commutation rules. It shares no code with the rewriting engine and
//! serves as an independent multiplication oracle.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::algebra::{AlgebraElement, IndexPart, NormalMonomial};
use crate::scalars::RationalScalar;

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn at(v: &[i64], i: usize) -> i64 {
    v.get(i - 1).copied().unwrap_or(0)
}

fn zip_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let w = a.len().max(b.len());
    trim((1..=w).map(|i| at(a, i) + at(b, i)).collect())
}

/// Exponents of `prod_i rho_i^{rho[i]} sigma_i^{sigma[i]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusExponents {
    rho: Vec<i64>,
    sigma: Vec<i64>,
}

impl TorusExponents {
    pub fn new(rho: Vec<i64>, sigma: Vec<i64>) -> Self {
        TorusExponents { rho: trim(rho), sigma: trim(sigma) }
    }

    pub fn rho(&self, i: usize) -> i64 {
        at(&self.rho, i)
    }

    pub fn sigma(&self, i: usize) -> i64 {
        at(&self.sigma, i)
    }

    fn mul(&self, other: &Self) -> Self {
        TorusExponents { rho: zip_add(&self.rho, &other.rho), sigma: zip_add(&self.sigma, &other.sigma) }
    }
}

/// An element of the base ring `D`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BaseRingElement {
    terms: BTreeMap<TorusExponents, RationalScalar>,
}

impl BaseRingElement {
    pub fn zero() -> Self {
        BaseRingElement::default()
    }

    pub fn one() -> Self {
        BaseRingElement::term(TorusExponents::default(), RationalScalar::one())
    }

    pub fn term(m: TorusExponents, c: RationalScalar) -> Self {
        let mut d = BaseRingElement::zero();
        d.add_term(m, c);
        d
    }

    /// `rho_i`.
    pub fn rho(i: usize) -> Self {
        let mut v = vec![0; i];
        v[i - 1] = 1;
        BaseRingElement::term(TorusExponents::new(v, vec![]), RationalScalar::one())
    }

    /// `sigma_i`.
    pub fn sigma(i: usize) -> Self {
        let mut v = vec![0; i];
        v[i - 1] = 1;
        BaseRingElement::term(TorusExponents::new(vec![], v), RationalScalar::one())
    }

    pub fn add_term(&mut self, m: TorusExponents, c: RationalScalar) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&TorusExponents, &RationalScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        let mut out = BaseRingElement::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BaseRingElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// `φ_i^power(e)`: the coefficient of `rho^a sigma^b` is multiplied by
/// `r_i^{-power a_i} s_i^{-power b_i}`.
pub fn phi_apply(i: usize, e: &BaseRingElement, power: i64) -> BaseRingElement {
    let mut out = BaseRingElement::zero();
    for (m, c) in &e.terms {
        let f = RationalScalar::r_pow(i, -power * m.rho(i)) * RationalScalar::s_pow(i, -power * m.sigma(i));
        out.add_term(m.clone(), c * &f);
    }
    out
}

/// Apply `prod_i φ_i^{shift[i]}`.
pub fn phi_multi(e: &BaseRingElement, shift: &[i64]) -> BaseRingElement {
    shift
        .iter()
        .enumerate()
        .filter(|(_, &p)| p != 0)
        .fold(e.clone(), |acc, (k, &p)| phi_apply(k + 1, &acc, p))
}

/// `t_i = (r_i^2 rho_i^2 - s_i^2 sigma_i^2) / (r_i^2 - s_i^2)`.
pub fn t_element(i: usize) -> BaseRingElement {
    let dinv = (RationalScalar::r_pow(i, 2) - RationalScalar::s_pow(i, 2))
        .inv()
        .expect("r_i^2 - s_i^2 is nonzero");
    let rho2 = BaseRingElement::rho(i).mul(&BaseRingElement::rho(i));
    let sigma2 = BaseRingElement::sigma(i).mul(&BaseRingElement::sigma(i));
    rho2.scale(&(&RationalScalar::r_pow(i, 2) * &dinv))
        .add(&sigma2.scale(&-(&RationalScalar::s_pow(i, 2) * &dinv)))
}

/// Per-index powers of the GWA generators: `h_i > 0` means `X_i^{h_i}`,
/// `h_i < 0` means `Y_i^{-h_i}`.
pub type Shift = Vec<i64>;

/// An element of `D(φ, t)`, written `sum_h d_h Z^h` with coefficients on
/// the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GWAElement {
    terms: BTreeMap<Shift, BaseRingElement>,
}

impl GWAElement {
    pub fn zero() -> Self {
        GWAElement::default()
    }

    pub fn one() -> Self {
        GWAElement::from_base(BaseRingElement::one())
    }

    pub fn from_base(d: BaseRingElement) -> Self {
        GWAElement::term(vec![], d)
    }

    pub fn term(h: Shift, d: BaseRingElement) -> Self {
        let mut g = GWAElement::zero();
        g.add_term(h, d);
        g
    }

    fn unit_shift(i: usize, e: i64) -> Shift {
        let mut h = vec![0; i];
        h[i - 1] = e;
        h
    }

    /// `X_i`.
    pub fn x(i: usize) -> Self {
        GWAElement::term(GWAElement::unit_shift(i, 1), BaseRingElement::one())
    }

    /// `Y_i`.
    pub fn y(i: usize) -> Self {
        GWAElement::term(GWAElement::unit_shift(i, -1), BaseRingElement::one())
    }

    pub fn add_term(&mut self, h: Shift, d: BaseRingElement) {
        if d.is_zero() {
            return;
        }
        let h = trim(h);
        let slot = self.terms.entry(h.clone()).or_default();
        *slot = slot.add(&d);
        if slot.is_zero() {
            self.terms.remove(&h);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &BaseRingElement)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (h, d) in &other.terms {
            out.add_term(h.clone(), d.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (h, d) in &other.terms {
            out.add_term(h.clone(), d.scale(&RationalScalar::from_int(-1)));
        }
        out
    }
}

fn prod_phi_t(i: usize, powers: impl Iterator<Item = i64>) -> BaseRingElement {
    let t = t_element(i);
    powers.fold(BaseRingElement::one(), |acc, k| acc.mul(&phi_apply(i, &t, k)))
}

/// `Z_i^h Z_i^g = c Z_i^{h+g}` with `c` in `D`; returns `c`.
fn same_index_product(i: usize, h: i64, g: i64) -> BaseRingElement {
    if h >= 0 && g >= 0 || h <= 0 && g <= 0 {
        return BaseRingElement::one();
    }
    if h > 0 {
        // X^a Y^b
        let (a, b) = (h, -g);
        if a >= b {
            prod_phi_t(i, a - b + 1..=a)
        } else {
            prod_phi_t(i, 1..=a)
        }
    } else {
        // Y^a X^b
        let (a, b) = (-h, g);
        if a >= b {
            prod_phi_t(i, (a - b..=a - 1).map(|k| -k))
        } else {
            prod_phi_t(i, (0..=a - 1).map(|k| -k))
        }
    }
}

/// Multiply using `Z^h d = φ^h(d) Z^h` and the same-index rules above.
pub fn gwa_multiply(a: &GWAElement, b: &GWAElement) -> GWAElement {
    let mut out = GWAElement::zero();
    for (h1, d1) in &a.terms {
        for (h2, d2) in &b.terms {
            let mut d = d1.mul(&phi_multi(d2, h1));
            let w = h1.len().max(h2.len());
            let mut h = Vec::with_capacity(w);
            for i in 1..=w {
                let (x, y) = (at(h1, i), at(h2, i));
                d = d.mul(&same_index_product(i, x, y));
                h.push(x + y);
            }
            out.add_term(h, d);
        }
    }
    out
}

/// Basis-preserving map `rho^a sigma^b x^u y^v ↦ rho^a sigma^b Z^{u - v}`.
pub fn to_gwa(e: &AlgebraElement) -> GWAElement {
    let mut out = GWAElement::zero();
    for (m, c) in e.terms() {
        let w = m.width();
        let rho = (1..=w).map(|i| m.part(i).rho).collect();
        let sigma = (1..=w).map(|i| m.part(i).sigma).collect();
        let h = (1..=w).map(|i| m.degree(i)).collect();
        out.add_term(h, BaseRingElement::term(TorusExponents::new(rho, sigma), c.clone()));
    }
    out
}

/// Inverse of [`to_gwa`].
pub fn from_gwa(g: &GWAElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (h, d) in &g.terms {
        for (t, c) in &d.terms {
            let w = h.len().max(t.rho.len()).max(t.sigma.len());
            let parts = (1..=w)
                .map(|i| {
                    let z = at(h, i);
                    IndexPart {
                        x: z.max(0) as u32,
                        y: (-z).max(0) as u32,
                        rho: t.rho(i),
                        sigma: t.sigma(i),
                    }
                })
                .collect();
            out.add_term(NormalMonomial::from_parts(parts), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_on_generators() {
        let got = phi_apply(1, &BaseRingElement::rho(1), 1);
        assert_eq!(got, BaseRingElement::rho(1).scale(&RationalScalar::r_pow(1, -1)));
        assert_eq!(phi_apply(1, &BaseRingElement::rho(2), 1), BaseRingElement::rho(2));
        let got = phi_apply(2, &BaseRingElement::sigma(2), 1);
        assert_eq!(got, BaseRingElement::sigma(2).scale(&RationalScalar::s_pow(2, -1)));
    }

    #[test]
    fn phi_of_t_is_the_xy_contraction() {
        let dinv = (RationalScalar::r_pow(1, 2) - RationalScalar::s_pow(1, 2)).inv().unwrap();
        let rho2 = BaseRingElement::rho(1).mul(&BaseRingElement::rho(1));
        let sigma2 = BaseRingElement::sigma(1).mul(&BaseRingElement::sigma(1));
        let want = rho2.scale(&dinv).add(&sigma2.scale(&-dinv));
        assert_eq!(phi_apply(1, &t_element(1), 1), want);
    }

    #[test]
    fn weyl_relations() {
        for i in 1..=2 {
            let (x, y) = (GWAElement::x(i), GWAElement::y(i));
            let t = t_element(i);
            assert_eq!(gwa_multiply(&y, &x), GWAElement::from_base(t.clone()));
            assert_eq!(gwa_multiply(&x, &y), GWAElement::from_base(phi_apply(i, &t, 1)));
            for d in [BaseRingElement::rho(1), BaseRingElement::sigma(2), t_element(1)] {
                let lhs = gwa_multiply(&x, &GWAElement::from_base(d.clone()));
                let rhs = gwa_multiply(&GWAElement::from_base(phi_apply(i, &d, 1)), &x);
                assert_eq!(lhs, rhs);
                let lhs = gwa_multiply(&GWAElement::from_base(d.clone()), &y);
                let rhs = gwa_multiply(&y, &GWAElement::from_base(phi_apply(i, &d, 1)));
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(
            gwa_multiply(&GWAElement::x(1), &GWAElement::y(2)),
            gwa_multiply(&GWAElement::y(2), &GWAElement::x(1))
        );
        assert_eq!(
            gwa_multiply(&GWAElement::x(1), &GWAElement::x(2)),
            gwa_multiply(&GWAElement::x(2), &GWAElement::x(1))
        );
    }

    #[test]
    fn powers_agree_with_repeated_products() {
        let x = GWAElement::x(1);
        let y = GWAElement::y(1);
        let mut xs = vec![GWAElement::one()];
        let mut ys = vec![GWAElement::one()];
        for k in 1..=3 {
            xs.push(gwa_multiply(&xs[k - 1], &x));
            ys.push(gwa_multiply(&ys[k - 1], &y));
        }
        for a in 0..=3 {
            for b in 0..=3 {
                let direct = gwa_multiply(&xs[a], &ys[b]);
                let stepwise = (0..b).fold(xs[a].clone(), |acc, _| gwa_multiply(&acc, &y));
                assert_eq!(direct, stepwise, "X^{a} Y^{b}");
                let direct = gwa_multiply(&ys[a], &xs[b]);
                let stepwise = (0..b).fold(ys[a].clone(), |acc, _| gwa_multiply(&acc, &x));
                assert_eq!(direct, stepwise, "Y^{a} X^{b}");
            }
        }
    }
}
