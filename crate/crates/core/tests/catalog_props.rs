use charvar::catalog::{
    character_variety_class, jordan_reduce, representation_variety_class, stratum_class,
    PunctureClass, StratumId, VarietySpec,
};
use proptest::prelude::*;

fn puncture() -> impl Strategy<Value = PunctureClass> {
    prop_oneof![
        Just(PunctureClass::JPlus),
        Just(PunctureClass::JMinus),
        Just(PunctureClass::MinusId),
    ]
}

fn punctures() -> impl Strategy<Value = Vec<PunctureClass>> {
    prop::collection::vec(puncture(), 1..=5)
}

fn spec() -> impl Strategy<Value = VarietySpec> {
    prop_oneof![
        (1u32..=6).prop_map(VarietySpec::free),
        (1u32..=4).prop_map(VarietySpec::surface),
        (0u32..=3, punctures()).prop_map(|(n, p)| VarietySpec::free_parabolic(n, p)),
        (1u32..=3, punctures()).prop_map(|(g, p)| VarietySpec::surface_parabolic(g, p)),
        (1u32..=6).prop_map(VarietySpec::abelian_sl2),
        (1u32..=6).prop_map(VarietySpec::abelian_gl2),
    ]
}

proptest! {
    #[test]
    fn spec_text_round_trips(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<VarietySpec>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<VarietySpec>(&json).unwrap(), s);
    }

    #[test]
    fn jordan_reduction_ignores_order(p in punctures(), seed in any::<u64>()) {
        let mut shuffled = p.clone();
        let len = shuffled.len();
        for i in (1..len).rev() {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % (i + 1));
        }
        let a = jordan_reduce(&p);
        prop_assert_eq!(a, jordan_reduce(&shuffled));
        prop_assert_eq!(a.r_plus + a.r_minus + a.t, len as u32);
        prop_assert_eq!(a.sigma == -1, (a.r_minus + a.t) % 2 == 1);
    }

    #[test]
    fn classes_ignore_puncture_order(g in 1u32..=3, p in punctures()) {
        let mut rev = p.clone();
        rev.reverse();
        let a = VarietySpec::surface_parabolic(g, p);
        let b = VarietySpec::surface_parabolic(g, rev);
        prop_assert_eq!(character_variety_class(&a).unwrap(), character_variety_class(&b).unwrap());
        prop_assert_eq!(
            representation_variety_class(&a).unwrap(),
            representation_variety_class(&b).unwrap()
        );
    }

    #[test]
    fn catalog_outputs_are_integral_polynomials(s in spec()) {
        let c = character_variety_class(&s).unwrap();
        prop_assert!(c.is_integral() && c.is_polynomial(), "{}: {}", s, c);
        if let Ok(r) = representation_variety_class(&s) {
            prop_assert!(r.is_integral() && r.is_polynomial());
            for st in StratumId::FIVE {
                let v = stratum_class(&s, st).unwrap();
                prop_assert!(v.is_integral() && v.is_polynomial(), "{} {}: {}", s, st, v);
            }
        }
    }
}
