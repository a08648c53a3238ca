use charvar::ring::{EquivariantClass, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=6, rational()), 0..6)
        .prop_map(|terms| terms.into_iter().collect())
}

fn int_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=5, -9i64..=9), 0..5)
        .prop_map(|terms| LaurentPoly::from_int_terms(&terms))
}

fn equivariant() -> impl Strategy<Value = EquivariantClass> {
    (int_poly(), int_poly()).prop_map(|(p, m)| EquivariantClass::new(p, m))
}

proptest! {
    #[test]
    fn addition_is_an_abelian_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn multiplication_is_commutative_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), q0 in prop_oneof![-7i64..=-1, 1i64..=7]) {
        let ev = |p: &LaurentPoly| p.evaluate_at_int(q0).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&LaurentPoly::one()), BigRational::from_integer(1.into()));
    }

    #[test]
    fn powers_agree_with_repeated_products(a in int_poly(), n in 0u32..=6) {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(n), acc);
    }

    #[test]
    fn text_round_trips(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), a.clone());
        prop_assert_eq!(a.to_latex().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn z2_power_is_repeated_z2_product(x in equivariant(), n in 1u32..=8) {
        let mut acc = x.clone();
        for _ in 1..n {
            acc = acc.z2_product(&x);
        }
        prop_assert_eq!(x.z2_power(n).unwrap(), acc);
    }

    #[test]
    fn z2_product_preserves_totals(x in equivariant(), y in equivariant()) {
        let p = x.z2_product(&y);
        prop_assert_eq!(p.total(), &x.total() * &y.total());
        prop_assert_eq!(p.difference(), &x.difference() * &y.difference());
    }
}

#[test]
fn torus_powers_match_products_up_to_eight() {
    for x in [
        EquivariantClass::torus_inversion(),
        EquivariantClass::torus_pair_swap(),
    ] {
        let mut acc = x.clone();
        for n in 1..=8 {
            assert_eq!(x.z2_power(n).unwrap(), acc, "n={n}");
            acc = acc.z2_product(&x);
        }
    }
}
