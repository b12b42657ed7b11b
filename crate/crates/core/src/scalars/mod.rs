//! Exact arithmetic in the coefficient field `K = Q(r_1..r_n, s_1..s_n)`.
//!
//! The parameters are formal, so no nontrivial monomial relation
//! `r_i^p = s_i^q` can hold and every equality test is decidable.

mod laurent;
mod monomial;
mod rational;
mod zpoly;

pub use laurent::LaurentPoly;
pub use monomial::{r_var, s_var, var_name, Exponents};
pub use rational::RationalScalar;

use num_traits::{One, Signed};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("input must be nonzero")]
    ZeroInput,
}

/// Field operations by name, for callers that dispatch dynamically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

/// Result of [`field_op`]: a scalar, or a truth value for `Eq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Scalar(RationalScalar),
    Bool(bool),
}

/// Apply a field operation. Unary operations ignore `b`; binary ones treat
/// a missing `b` as zero.
pub fn field_op(
    op: FieldOp,
    a: &RationalScalar,
    b: Option<&RationalScalar>,
) -> Result<FieldValue, ScalarError> {
    let zero = RationalScalar::zero();
    let b = b.unwrap_or(&zero);
    Ok(match op {
        FieldOp::Add => FieldValue::Scalar(a + b),
        FieldOp::Sub => FieldValue::Scalar(a - b),
        FieldOp::Mul => FieldValue::Scalar(a * b),
        FieldOp::Div => FieldValue::Scalar(a.checked_div(b)?),
        FieldOp::Neg => FieldValue::Scalar(-a),
        FieldOp::Inv => FieldValue::Scalar(a.inv()?),
        FieldOp::Eq => FieldValue::Bool(a == b),
    })
}

/// The quantum integer `[k] = (r_i^{2k} - s_i^{2k}) / (r_i^2 - s_i^2)`.
pub fn quantum_integer(i: usize, k: i64) -> RationalScalar {
    let num = RationalScalar::r_pow(i, 2 * k) - RationalScalar::s_pow(i, 2 * k);
    let den = RationalScalar::r_pow(i, 2) - RationalScalar::s_pow(i, 2);
    num.checked_div(&den).expect("r_i^2 - s_i^2 is nonzero")
}

/// Decide whether `x = sign * (r_j / s_j)^p` exactly, returning `(sign, p)`.
pub fn ratio_as_signed_power(x: &RationalScalar, j: usize) -> Result<Option<(i32, i64)>, ScalarError> {
    if x.is_zero() {
        return Err(ScalarError::ZeroInput);
    }
    let Some((m, c)) = x.as_monomial() else {
        return Ok(None);
    };
    if !c.abs().is_one() {
        return Ok(None);
    }
    let (rv, sv) = (r_var(j), s_var(j));
    let p = m.get(rv);
    let only_rs = m.support().all(|(v, _)| v == rv || v == sv);
    if !only_rs || m.get(sv) != -p {
        return Ok(None);
    }
    let sign = if c.is_negative() { -1 } else { 1 };
    Ok(Some((sign, p as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(i: usize) -> RationalScalar {
        RationalScalar::r(i)
    }
    fn s(i: usize) -> RationalScalar {
        RationalScalar::s(i)
    }

    #[test]
    fn inverse_and_self_division() {
        assert!((r(1) * r(1).inv().unwrap()).is_one());
        let d = &r(1) * &r(1) - &s(1) * &s(1);
        assert!(d.checked_div(&d).unwrap().is_one());
        assert_eq!(RationalScalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn difference_of_fourth_powers_reduces() {
        let num = r(1).pow(4).unwrap() - s(1).pow(4).unwrap();
        let den = r(1).pow(2).unwrap() - s(1).pow(2).unwrap();
        let q = num.checked_div(&den).unwrap() * RationalScalar::one();
        assert_eq!(q, r(1).pow(2).unwrap() + s(1).pow(2).unwrap());
        assert!(q.denom().is_one());
    }

    #[test]
    fn quantum_integer_small_cases() {
        assert!(quantum_integer(1, 0).is_zero());
        assert!(quantum_integer(1, 1).is_one());
        assert_eq!(quantum_integer(1, 2), r(1).pow(2).unwrap() + s(1).pow(2).unwrap());
        // [-1] = -r^-2 s^-2
        assert_eq!(
            quantum_integer(2, -1),
            -(r(2).pow(-2).unwrap() * s(2).pow(-2).unwrap())
        );
    }

    #[test]
    fn signed_power_detection() {
        let x = r(1) * s(1).inv().unwrap();
        assert_eq!(ratio_as_signed_power(&x, 1), Ok(Some((1, 1))));
        assert_eq!(ratio_as_signed_power(&RationalScalar::one(), 1), Ok(Some((1, 0))));
        assert_eq!(ratio_as_signed_power(&r(1).pow(2).unwrap(), 1), Ok(None));
        assert_eq!(ratio_as_signed_power(&(-x.clone()), 1), Ok(Some((-1, 1))));
        assert_eq!(ratio_as_signed_power(&x, 2), Ok(None));
        assert_eq!(
            ratio_as_signed_power(&RationalScalar::zero(), 1),
            Err(ScalarError::ZeroInput)
        );
    }

    #[test]
    fn field_op_dispatch() {
        let a = r(1);
        let b = s(1);
        assert_eq!(field_op(FieldOp::Eq, &a, Some(&a)), Ok(FieldValue::Bool(true)));
        assert_eq!(
            field_op(FieldOp::Div, &a, Some(&RationalScalar::zero())),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(
            field_op(FieldOp::Sub, &a, Some(&b)),
            Ok(FieldValue::Scalar(&a - &b))
        );
    }

    #[test]
    fn display_forms() {
        let d = r(1).pow(2).unwrap() - s(1).pow(2).unwrap();
        let t = (r(1).pow(2).unwrap()).checked_div(&d).unwrap();
        assert_eq!(t.to_string(), "r1^2/(r1^2 - s1^2)");
        assert_eq!(d.inv().unwrap().neg_ref().to_string(), "-1/(r1^2 - s1^2)");
    }
}
