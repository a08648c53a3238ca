use super::PunctureClass::*;
use super::*;
use crate::motive::{evaluate, Rule};
use crate::ring::EquivariantClass;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn sl2() -> LaurentPoly {
    p("q^3 - q")
}

/// Every in-range spec of the agreement checks, twisted ones included.
fn in_range() -> Vec<VarietySpec> {
    let mut out = Vec::new();
    out.extend((1..=6).map(VarietySpec::free));
    out.extend((1..=4).map(VarietySpec::surface));
    for s in 1..=4 {
        out.extend((0..=4).map(|n| VarietySpec::free_jplus(n, s)));
        out.extend((1..=3).map(|g| VarietySpec::surface_jplus(g, s)));
    }
    for g in 1..=3 {
        out.extend((0..=4).map(|r| VarietySpec::twisted(g, r)));
    }
    out
}

#[test]
fn free_rank_one_strata() {
    let spec = VarietySpec::free(1);
    let want = [
        (StratumId::Iota, "2"),
        (StratumId::UpsilonHat, "2*q^2 - 2"),
        (StratumId::DeltaHat, "q^3 - 2*q^2 - q"),
        (StratumId::Varrho, "0"),
        (StratumId::Irr, "0"),
    ];
    for (s, v) in want {
        assert_eq!(stratum_class(&spec, s).unwrap(), p(v), "{s}");
    }
}

#[test]
fn known_specializations() {
    let cv = |s: &str| character_variety_class(&s.parse().unwrap()).unwrap();
    assert_eq!(cv("free:n=1"), p("q"));
    assert_eq!(cv("free:n=2"), p("q^3"));
    assert_eq!(cv("surface:g=1"), p("q^2 + 1"));
    assert_eq!(cv("free:n=1,punct=J+"), p("q - 1") * p("q + 3"));
    // commuting pairs: |G| times the number of conjugacy classes
    let rep = representation_variety_class(&VarietySpec::surface(1)).unwrap();
    assert_eq!(rep, sl2() * p("q + 4"));
    let tw = representation_variety_class(&VarietySpec::twisted(1, 1)).unwrap();
    let want = p("q - 1").pow(2) * p("q + 1") * p("q") * p("q + 2")
        + (p("q + 1").pow(2) * p("q") * p("q - 1")).scale_int(2);
    assert_eq!(tw, want);
    assert_eq!(
        representation_variety_class(&VarietySpec::free(2)).unwrap(),
        sl2().pow(2)
    );
}

#[test]
fn surface_genus_one_is_torus_quotient() {
    let torus_sq = EquivariantClass::torus_inversion().z2_power(2).unwrap();
    assert_eq!(
        character_variety_class(&VarietySpec::surface(1)).unwrap(),
        torus_sq.plus
    );
}

#[test]
fn abelian_sl2_matches_half_sum() {
    for n in 1..=6 {
        let want = (p("q - 1").pow(n) + p("q + 1").pow(n))
            .scale(&num_rational::BigRational::new(1.into(), 2.into()));
        assert_eq!(
            character_variety_class(&VarietySpec::abelian_sl2(n)).unwrap(),
            want
        );
    }
}

#[test]
fn abelian_gl2_derived_and_printed() {
    let spec = VarietySpec::abelian_gl2(1);
    // GL2 // GL2 = C x C* via trace and determinant
    assert_eq!(character_variety_class(&spec).unwrap(), p("q^2 - q"));
    assert_eq!(printed::abelian_gl2(1), p("q^2 + 1"));
    for n in 1..=5 {
        assert_ne!(
            printed::abelian_gl2(n),
            character_variety_class(&VarietySpec::abelian_gl2(n)).unwrap()
        );
    }
    assert_eq!(notes(&spec)[0].kind, NoteKind::PrintedVariantDiffers);
}

#[test]
fn strata_sum_to_representation_variety() {
    for spec in in_range() {
        let sum: LaurentPoly = StratumId::FIVE
            .iter()
            .map(|&s| stratum_class(&spec, s).unwrap())
            .sum();
        assert_eq!(sum, representation_variety_class(&spec).unwrap(), "{spec}");
        let red = stratum_class(&spec, StratumId::Red).unwrap();
        let irr = stratum_class(&spec, StratumId::Irr).unwrap();
        assert_eq!(red + irr, sum, "{spec}");
    }
}

#[test]
fn assembly_matches_closed_form() {
    for spec in in_range() {
        let (v, trace) = character_variety_via_strata(&spec).unwrap();
        assert_eq!(v, character_variety_class(&spec).unwrap(), "{spec}");
        assert_eq!(trace.result(), Some(&v));
    }
    for n in 1..=6 {
        for spec in [VarietySpec::abelian_sl2(n), VarietySpec::abelian_gl2(n)] {
            let (v, _) = character_variety_via_strata(&spec).unwrap();
            assert_eq!(v, character_variety_class(&spec).unwrap(), "{spec}");
        }
    }
}

#[test]
fn stratum_motives_match_closed_forms() {
    for spec in in_range() {
        for s in StratumId::FIVE {
            let (v, _) = evaluate(&stratum_motive(&spec, s).unwrap()).unwrap();
            assert_eq!(v, stratum_class(&spec, s).unwrap(), "{spec} {s}");
        }
    }
}

#[test]
fn free_rank_two_trace_uses_core_and_division() {
    let (v, trace) = character_variety_via_strata(&VarietySpec::free(2)).unwrap();
    assert_eq!(v, p("q^3"));
    let rules: Vec<Rule> = trace.rules_used().collect();
    assert!(rules.contains(&Rule::Core));
    assert!(rules.contains(&Rule::PrincipalQuotient));
    assert!(rules.contains(&Rule::Z2Quotient));
}

#[test]
fn surface_parabolic_sign_of_last_term() {
    // (q+1)(q-3): 12 points at q = 5, i.e. 1440 free orbits of size 120
    let spec = VarietySpec::surface_jplus(1, 1);
    assert_eq!(character_variety_class(&spec).unwrap(), p("q^2 - 2*q - 3"));
    assert_eq!(printed::surface_jplus_boxed(1, 1), p("2*q^2 + 2*q"));
    assert_eq!(
        representation_variety_class(&spec).unwrap(),
        p("q") * p("q + 1").pow(2) * p("q - 1") * p("q - 3")
    );
    for g in 1..=3 {
        for s in 1..=6u32 {
            let fixed =
                character_variety_class(&VarietySpec::surface_jplus(g, s as usize)).unwrap();
            let shown = printed::surface_jplus_boxed(g, s);
            assert_eq!(fixed == shown, s % 2 == 0, "g={g} s={s}");
        }
    }
    assert_eq!(notes(&spec)[0].kind, NoteKind::PrintedVariantDiffers);
    assert!(notes(&VarietySpec::surface_jplus(1, 2)).is_empty());
}

#[test]
fn printed_surface_reducible_locus() {
    for g in 1..=4u32 {
        let n = 2 * g;
        let red = stratum_class(&VarietySpec::surface(g), StratumId::Red).unwrap();
        let shown = printed::surface_reducible(g);
        let two_n = LaurentPoly::constant(1 << n);
        let fix = two_n * p("q^2 - 1") * (LaurentPoly::q_pow(n as i64 - 1) + LaurentPoly::one());
        assert_eq!(shown + fix, red, "g={g}");
    }
    // at genus one every pair commutes, so the reducible locus is everything
    assert_eq!(
        stratum_class(&VarietySpec::surface(1), StratumId::Irr).unwrap(),
        LaurentPoly::zero()
    );
}

#[test]
fn plane_recursions() {
    let pi = |s| helper_plane_class(HelperPlane::SmallPi, s, 0).unwrap();
    assert_eq!(pi(1), LaurentPoly::zero());
    assert_eq!(pi(2), p("q - 1"));
    for s in 2..=8 {
        assert_eq!(pi(s), p("q - 1").pow(s - 1) - pi(s - 1), "s={s}");
    }
    for g in 1..=3 {
        let big = |s| helper_plane_class(HelperPlane::BigPi, s, g).unwrap();
        let q2g = LaurentPoly::q_pow(2 * g as i64);
        assert_eq!(big(1), &q2g - &LaurentPoly::q_pow(2 * g as i64 - 1));
        for s in 2..=8 {
            assert_eq!(
                big(s),
                &q2g * &p("q - 1").pow(s - 1) - big(s - 1),
                "g={g} s={s}"
            );
        }
    }
    assert_eq!(
        helper_plane_class(HelperPlane::BigPi, 1, 1).unwrap(),
        p("q^2 - q")
    );
    assert!(helper_plane_class(HelperPlane::SmallPi, 0, 0).is_err());
    assert!(helper_plane_class(HelperPlane::BigPi, 1, 0).is_err());
}

#[test]
fn every_output_is_integral() {
    let mut specs = in_range();
    specs.extend((1..=6).map(VarietySpec::abelian_sl2));
    specs.extend((1..=6).map(VarietySpec::abelian_gl2));
    for spec in specs {
        let c = character_variety_class(&spec).unwrap();
        assert!(c.is_integral() && c.is_polynomial(), "{spec}: {c}");
        if let Ok(r) = representation_variety_class(&spec) {
            assert!(r.is_integral() && r.is_polynomial(), "{spec}: {r}");
            for s in StratumId::FIVE {
                let v = stratum_class(&spec, s).unwrap();
                assert!(v.is_integral() && v.is_polynomial(), "{spec} {s}: {v}");
            }
        }
    }
}

#[test]
fn parabolic_strata_without_diagonal_pieces() {
    for n in 0..=3 {
        let spec = VarietySpec::free_jplus(n, 2);
        assert!(stratum_class(&spec, StratumId::DeltaHat).unwrap().is_zero());
        assert!(stratum_class(&spec, StratumId::Iota).unwrap().is_zero());
    }
    let varrho = stratum_class(&VarietySpec::surface_jplus(1, 1), StratumId::Varrho).unwrap();
    assert_eq!(
        varrho,
        p("q + 1") * (p("q - 1").pow(2) - p("4")) * p("q") * p("q - 1")
    );
}

#[test]
fn jordan_normalization() {
    let mixed = VarietySpec::surface_parabolic(2, vec![JMinus, MinusId, JPlus]);
    let plain = VarietySpec::surface_jplus(2, 2);
    assert_eq!(
        character_variety_class(&mixed).unwrap(),
        character_variety_class(&plain).unwrap()
    );
    assert_eq!(
        representation_variety_class(&mixed).unwrap(),
        representation_variety_class(&plain).unwrap()
    );
    let tw = VarietySpec::surface_parabolic(1, vec![JMinus]);
    assert_eq!(
        representation_variety_class(&tw).unwrap(),
        representation_variety_class(&VarietySpec::twisted(1, 1)).unwrap()
    );
    assert_eq!(
        character_variety_class(&VarietySpec::surface_parabolic(1, vec![MinusId, MinusId]))
            .unwrap(),
        p("q^2 + 1")
    );
    let free_mixed = VarietySpec::free_parabolic(2, vec![JMinus, MinusId]);
    assert_eq!(
        character_variety_class(&free_mixed).unwrap(),
        character_variety_class(&VarietySpec::free_jplus(2, 1)).unwrap()
    );
    let only_central = VarietySpec::free_parabolic(0, vec![MinusId]);
    assert!(character_variety_class(&only_central).unwrap().is_one());
    assert_eq!(notes(&only_central)[0].kind, NoteKind::BoundaryParameter);
}

#[test]
fn twisted_genus_one_without_unipotents() {
    let spec: VarietySpec = "twisted:g=1,r=0".parse().unwrap();
    assert!(representation_variety_class(&spec).unwrap().is_zero());
    assert!(character_variety_class(&spec).unwrap().is_zero());
    let n = notes(&spec);
    assert_eq!(n.len(), 1);
    assert_eq!(n[0].kind, NoteKind::Suspect);
    assert!(n[0].message.contains("suspect at r=0, g=1"));
    assert!(notes(&VarietySpec::twisted(1, 1)).is_empty());
    assert!(notes(&VarietySpec::twisted(2, 0)).is_empty());
}

#[test]
fn twisted_has_no_reducibles() {
    for g in 1..=3 {
        for r in 0..=3 {
            let spec = VarietySpec::twisted(g, r);
            assert!(stratum_class(&spec, StratumId::Red).unwrap().is_zero());
            let rep = representation_variety_class(&spec).unwrap();
            assert_eq!(
                rep.divide_exact(&sl2()).unwrap(),
                character_variety_class(&spec).unwrap()
            );
        }
    }
}

#[test]
fn boundary_rank_zero() {
    let spec = VarietySpec::free_jplus(0, 1);
    assert!(character_variety_class(&spec).unwrap().is_one());
    assert_eq!(notes(&spec)[0].kind, NoteKind::BoundaryParameter);
    assert_eq!(
        character_variety_class(&VarietySpec::free_jplus(0, 2)).unwrap(),
        p("2*q - 2")
    );
}

#[test]
fn abelian_strata_not_tabulated() {
    let err = stratum_class(&VarietySpec::abelian_gl2(2), StratumId::Irr).unwrap_err();
    assert!(err.to_string().starts_with("not tabulated"));
    assert!(representation_variety_class(&VarietySpec::abelian_sl2(3)).is_err());
}

#[test]
fn stratum_names_parse() {
    for s in [StratumId::FIVE.as_slice(), &[StratumId::Red]].concat() {
        assert_eq!(s.name().parse::<StratumId>().unwrap(), s);
    }
    assert_eq!(
        "upsilon".parse::<StratumId>().unwrap(),
        StratumId::UpsilonHat
    );
    assert!("sigma".parse::<StratumId>().is_err());
}
