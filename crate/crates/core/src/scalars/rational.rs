//! Elements of the rational-function field `Q(r_1..r_n, s_1..s_n)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::{r_var, s_var, Exponents};
use super::zpoly::{gcd, ZPoly};
use super::ScalarError;

/// A reduced fraction `num / den` of Laurent polynomials.
///
/// Canonical form: `den` is a polynomial with coprime integer coefficients,
/// positive leading coefficient and no monomial factor; `num` absorbs every
/// rational and monomial unit; `num` and `den` share no factor of positive
/// degree. Canonical forms are unique, so the derived `Eq` is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalScalar {
    pub fn zero() -> Self {
        RationalScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalScalar::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        RationalScalar::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalScalar::from_laurent(LaurentPoly::constant(c))
    }

    /// Any Laurent polynomial is already canonical over denominator one.
    pub fn from_laurent(num: LaurentPoly) -> Self {
        RationalScalar {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `c * x^m` for an exponent vector over the parameter slots.
    pub fn monomial(m: Exponents, c: BigRational) -> Self {
        RationalScalar::from_laurent(LaurentPoly::monomial(m, c))
    }

    /// The parameter `r_i`.
    pub fn r(i: usize) -> Self {
        RationalScalar::r_pow(i, 1)
    }

    /// The parameter `s_i`.
    pub fn s(i: usize) -> Self {
        RationalScalar::s_pow(i, 1)
    }

    pub fn r_pow(i: usize, e: i64) -> Self {
        RationalScalar::monomial(Exponents::var(r_var(i), e as i32), BigRational::one())
    }

    pub fn s_pow(i: usize, e: i64) -> Self {
        RationalScalar::monomial(Exponents::var(s_var(i), e as i32), BigRational::one())
    }

    /// Canonicalize an arbitrary fraction.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalScalar::zero());
        }
        let (cn, sn, pn) = num.to_primitive();
        let (cd, sd, pd) = den.to_primitive();
        let (pn, pd) = if pn.is_one() || pd.is_one() {
            (pn, pd)
        } else {
            let g = gcd(&pn, &pd);
            if g.is_one() {
                (pn, pd)
            } else {
                (
                    pn.div_exact(&g).expect("gcd divides numerator"),
                    pd.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let num = LaurentPoly::from_zpoly(&pn)
            .scale(&(cn / cd))
            .shift(&sn.sub(&sd));
        Ok(RationalScalar {
            num,
            den: LaurentPoly::from_zpoly(&pd),
        })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The value as a rational constant, if it has no parameter dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// `c * x^m` with `m` the exponent vector, if the value is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigRational)> {
        if self.den.is_one() {
            self.num.as_monomial()
        } else {
            None
        }
    }

    fn den_zpoly(&self) -> ZPoly {
        // the canonical denominator is its own primitive part
        self.den.to_primitive().2
    }

    /// Exact quotient of a Laurent polynomial by a primitive polynomial known
    /// to divide it.
    fn div_laurent(p: &LaurentPoly, d: &ZPoly) -> LaurentPoly {
        if d.is_one() {
            return p.clone();
        }
        let (c, s, prim) = p.to_primitive();
        let q = prim.div_exact(d).expect("exact division");
        LaurentPoly::from_zpoly(&q).scale(&c).shift(&s)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RationalScalar::from_parts(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        // Henrici: with g = gcd(b, d), b = g b', d = g d', only g can share
        // a factor with a d' + c b'.
        let b = self.den_zpoly();
        let d = other.den_zpoly();
        let g = if b.is_one() || d.is_one() {
            ZPoly::one()
        } else {
            gcd(&b, &d)
        };
        let b1 = b.div_exact(&g).expect("gcd divides");
        let d1 = d.div_exact(&g).expect("gcd divides");
        let num = self
            .num
            .mul(&LaurentPoly::from_zpoly(&d1))
            .add(&other.num.mul(&LaurentPoly::from_zpoly(&b1)));
        if num.is_zero() {
            return RationalScalar::zero();
        }
        if g.is_one() {
            return RationalScalar {
                num,
                den: LaurentPoly::from_zpoly(&b1.mul(&d1)),
            };
        }
        let (_, _, prim) = num.to_primitive();
        let h = gcd(&prim, &g);
        let num = RationalScalar::div_laurent(&num, &h);
        let g1 = g.div_exact(&h).expect("gcd divides");
        RationalScalar {
            num,
            den: LaurentPoly::from_zpoly(&g1.mul(&b1).mul(&d1)),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalScalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RationalScalar::from_laurent(self.num.mul(&other.num));
        }
        // cross-cancel numerator of each side against the other denominator
        let cancel = |num: &LaurentPoly, den: &LaurentPoly| -> ZPoly {
            if den.is_one() || num.as_monomial().is_some() {
                ZPoly::one()
            } else {
                let (_, _, pn) = num.to_primitive();
                let (_, _, pd) = den.to_primitive();
                gcd(&pn, &pd)
            }
        };
        let g1 = cancel(&self.num, &other.den);
        let g2 = cancel(&other.num, &self.den);
        let num = RationalScalar::div_laurent(&self.num, &g1)
            .mul(&RationalScalar::div_laurent(&other.num, &g2));
        let den_a = self.den_zpoly().div_exact(&g2).expect("gcd divides");
        let den_b = other.den_zpoly().div_exact(&g1).expect("gcd divides");
        RationalScalar {
            num,
            den: LaurentPoly::from_zpoly(&den_a.mul(&den_b)),
        }
    }

    pub fn neg_ref(&self) -> Self {
        RationalScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // already coprime; only the units move
        let (c, s, prim) = self.num.to_primitive();
        let num = self
            .den
            .scale(&(BigRational::one() / c))
            .shift(&s.neg());
        Ok(RationalScalar {
            num,
            den: LaurentPoly::from_zpoly(&prim),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if let Some((m, c)) = self.as_monomial() {
            let c = num_traits::pow::Pow::pow(c, e as u64);
            return Ok(RationalScalar::monomial(m.scale(e as i32), c));
        }
        let mut base = self.clone();
        let mut acc = RationalScalar::one();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// Rename parameter slots (e.g. identify `r_i` with `r_1`). Fails if the
    /// denominator vanishes under the substitution.
    pub fn remap_vars(&self, f: impl Fn(usize) -> usize) -> Result<Self, ScalarError> {
        RationalScalar::from_parts(self.num.remap_vars(&f), self.den.remap_vars(&f))
    }
}

impl Default for RationalScalar {
    fn default() -> Self {
        RationalScalar::zero()
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalScalar> for &RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &RationalScalar) -> RationalScalar {
                let f: fn(&RationalScalar, &RationalScalar) -> RationalScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<RationalScalar> for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: RationalScalar) -> RationalScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalScalar> for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &RationalScalar) -> RationalScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<RationalScalar> for &RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: RationalScalar) -> RationalScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        self.neg_ref()
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        self.neg_ref()
    }
}

impl Zero for RationalScalar {
    fn zero() -> Self {
        RationalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalScalar {
    fn one() -> Self {
        RationalScalar::one()
    }
}

impl From<i64> for RationalScalar {
    fn from(c: i64) -> Self {
        RationalScalar::from_int(c)
    }
}

impl std::iter::Sum for RationalScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RationalScalar::zero(), |a, b| a + b)
    }
}
