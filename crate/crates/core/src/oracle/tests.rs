use super::*;
use crate::catalog::PunctureClass::*;

fn opts() -> CountOptions {
    CountOptions::default()
}

fn run(spec: &str, q: u32) -> CountReport {
    verify(&spec.parse().unwrap(), q, &opts()).unwrap()
}

fn vector(r: &CountReport) -> Vec<u64> {
    StratumId::FIVE.iter().map(|&s| r.count(s)).collect()
}

#[test]
fn free_rank_one_over_f3() {
    let r = count_free(1, 3, &[], &opts()).unwrap();
    assert_eq!(vector(&r), vec![2, 16, 6, 0, 0]);
    assert!(r.matches.values().all(|&m| m));
    assert!(r.total_match, "{:?}", r.diagnostics);
    assert_eq!(r.quotient.as_ref().unwrap().count, "3");
}

#[test]
fn free_counts_match_catalog() {
    for (n, q) in [(2, 3), (2, 5), (3, 3)] {
        let r = count_free(n, q, &[], &opts()).unwrap();
        assert!(r.total_match, "n={n} q={q}: {:?}", r.diagnostics);
        assert_eq!(r.total, ((q as u64).pow(3) - q as u64).pow(n));
    }
}

#[test]
fn surface_genus_one_totals() {
    let r3 = count_surface(1, 3, &[], &opts()).unwrap();
    assert_eq!(r3.total, 168);
    assert!(r3.total_match, "{:?}", r3.diagnostics);
    let r5 = count_surface(1, 5, &[], &opts()).unwrap();
    assert_eq!(r5.total, 1080);
    assert!(r5.total_match, "{:?}", r5.diagnostics);
}

#[test]
fn parabolic_counts() {
    let free = count_free(1, 5, &[JPlus], &opts()).unwrap();
    assert!(free.total_match, "{:?}", free.diagnostics);
    assert_eq!(free.total, 120 * 24);

    let surf = count_surface(1, 5, &[JPlus], &opts()).unwrap();
    assert_eq!(surf.total, 1440);
    assert!(surf.matches.values().all(|&m| m));
    // 1440 free orbits of size 120
    let quotient = surf.quotient.as_ref().unwrap();
    assert_eq!(quotient.count, "12");
    assert!(quotient.matches);
    let printed = surf.printed.as_ref().unwrap();
    assert_eq!(printed.printed, "60");
    assert!(!printed.matches && !surf.total_match);
    assert!(surf.diagnostics.iter().any(|d| d.contains("gives 60")));

    let even = run("surface:g=1,s=2", 3);
    assert!(even.printed.is_none());
    assert!(even.total_match, "{:?}", even.diagnostics);

    let small = count_surface(1, 3, &[JPlus], &opts()).unwrap();
    assert_eq!(small.total, 0);
    assert_eq!(small.expected_total, "0");
    assert!(small.quotient.as_ref().unwrap().matches);
    assert_eq!(small.printed.as_ref().unwrap().printed, "24");
}

#[test]
fn twisted_genus_one() {
    let r = count_twisted(1, 0, 3, &opts()).unwrap();
    assert_eq!(r.total, 24);
    assert_eq!(r.expected_total, "0");
    assert!(!r.total_match);
    assert!(r
        .diagnostics
        .iter()
        .any(|d| d.contains("suspect at r=0, g=1")));

    let r5 = count_twisted(1, 0, 5, &opts()).unwrap();
    assert_eq!(r5.total, 120);
    assert!(!r5.total_match);

    let r1 = count_twisted(1, 1, 5, &opts()).unwrap();
    assert_eq!(r1.expected_total, "4800");
    assert_eq!(r1.total, 4800);
    assert!(r1.total_match, "{:?}", r1.diagnostics);
}

#[test]
fn mixed_jordan_punctures() {
    let free = run("free:n=1,punct=J-,-Id,J+", 5);
    assert!(free.total_match, "{:?}", free.diagnostics);
    // reduces to one J+ puncture, where only the printed box disagrees
    let surf = run("surface:g=1,punct=J-,-Id", 5);
    assert!(surf.matches.values().all(|&m| m));
    assert!(surf.quotient.as_ref().unwrap().matches);
    assert!(!surf.printed.as_ref().unwrap().matches);
    let tw = run("surface:g=1,punct=J-", 5);
    assert_eq!(tw.total, count_twisted(1, 1, 5, &opts()).unwrap().total);
}

#[test]
fn abelian_orbit_counts() {
    let gl = run("abelian-gl2:n=1", 3);
    assert_eq!(gl.total, 6);
    assert_eq!(gl.expected_total, "6");
    assert!(!gl.total_match);
    assert!(gl.diagnostics.iter().any(|d| d.contains("gives 10")));
    let gl5 = run("abelian-gl2:n=1", 5);
    assert_eq!(
        (gl5.total, gl5.printed.unwrap().printed),
        (20, "26".to_string())
    );
    for q in [3, 5, 7] {
        for n in 1..=4 {
            let r = verify(&VarietySpec::abelian_sl2(n), q, &opts()).unwrap();
            assert!(r.total_match, "n={n} q={q}");
            assert!(r.printed.is_none());
        }
    }
}

#[test]
fn characteristic_two() {
    let o = CountOptions {
        allow_char2: true,
        ..opts()
    };
    let r = verify(&VarietySpec::free(2), 2, &o).unwrap();
    assert_eq!(r.total, 36);
    assert!(r.total_match);
    assert!(r.counts.is_empty());
    assert!(matches!(
        verify(&VarietySpec::surface(1), 2, &o),
        Err(OracleError::Char2Unsupported(_))
    ));
    assert!(matches!(
        verify(&VarietySpec::free(2), 2, &opts()),
        Err(OracleError::UnsupportedField(2))
    ));
}

#[test]
fn report_json_has_stable_keys() {
    let r = run("free:n=1", 3);
    let js = r.to_json();
    for key in [
        "spec",
        "q",
        "counts",
        "expected",
        "matches",
        "total_match",
        "elapsed_ms",
    ] {
        assert!(js.contains(&format!("\"{key}\"")), "missing {key}");
    }
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["spec"], "free:n=1");
    assert_eq!(v["expected"]["delta_hat"], "6");
    let back: CountReport = serde_json::from_str(&js).unwrap();
    assert_eq!(back, r);
}

#[test]
fn too_large_instances_fail_cleanly() {
    let err = verify(&VarietySpec::surface(2), 7, &opts()).unwrap_err();
    assert!(err.to_string().starts_with("instance too large"));
}
