//! Field axioms and closed-form identities for the coefficient field.

use mpweyl::scalars::{quantum_integer, ratio_as_signed_power, RationalScalar};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = RationalScalar> {
    prop_oneof![
        (-4i64..=4).prop_map(RationalScalar::from_int),
        (1usize..=2, -2i64..=2).prop_map(|(i, e)| RationalScalar::r_pow(i, e)),
        (1usize..=2, -2i64..=2).prop_map(|(i, e)| RationalScalar::s_pow(i, e)),
    ]
}

/// Small random expressions built from integers and parameters.
fn scalar() -> impl Strategy<Value = RationalScalar> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner).prop_map(|(a, b)| if b.is_zero() { a } else { a.checked_div(&b).unwrap() }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn distributive(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn inverses(a in scalar()) {
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn equality_matches_cross_multiplication(a in scalar(), b in scalar()) {
        let an = RationalScalar::from_laurent(a.numer().clone());
        let ad = RationalScalar::from_laurent(a.denom().clone());
        let bn = RationalScalar::from_laurent(b.numer().clone());
        let bd = RationalScalar::from_laurent(b.denom().clone());
        prop_assert_eq!(a == b, an * bd == bn * ad);
    }

    #[test]
    fn signed_power_is_a_partial_inverse(j in 1usize..=3, p in -10i64..=10, neg in any::<bool>()) {
        let base = RationalScalar::r_pow(j, p) * RationalScalar::s_pow(j, -p);
        let x = if neg { -base } else { base };
        let sign = if neg { -1 } else { 1 };
        prop_assert_eq!(ratio_as_signed_power(&x, j), Ok(Some((sign, p))));
    }
}

#[test]
fn quantum_integer_matches_geometric_sum() {
    for i in 1..=2 {
        for k in 1..=20i64 {
            let sum: RationalScalar = (0..k)
                .map(|j| RationalScalar::r_pow(i, 2 * j) * RationalScalar::s_pow(i, 2 * (k - 1 - j)))
                .sum();
            let q = quantum_integer(i, k);
            assert_eq!(q, sum, "[{k}] at index {i}");
            assert!(!q.is_zero());
        }
    }
}
