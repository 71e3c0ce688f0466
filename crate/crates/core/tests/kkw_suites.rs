//! Boundary and interior suites through the public API.

use kkwcas::boundary_geometry::OperatorSpec;
use kkwcas::kkw::{
    boundary_total, enumerate_cases, evaluate_pairing, interior_integrand, verify_suite, verify_suite_with, wres_prefactor,
    BoundaryDensity, CaseId, InteriorVariant, KkwError, Pairing, SecondFactor, SuiteId, SuiteOptions,
};

fn density(text: &str, n: usize) -> BoundaryDensity {
    BoundaryDensity::parse(text, n).unwrap()
}

#[test]
fn adjoint_pairing_in_dimension_four() {
    let p = Pairing { n: 4, first: OperatorSpec::d_hat(4), second: SecondFactor::Inverse(OperatorSpec::d_hat_adjoint(4)) };
    let cases = evaluate_pairing(&p, &SuiteOptions::default()).unwrap();
    let by_id = |id: CaseId| cases.iter().find(|c| c.case.id == id).unwrap().value.clone();
    assert!(by_id(CaseId::AI).is_zero());
    assert_eq!(by_id(CaseId::AII), density("-3/2*h1*pi*omega_3", 4));
    assert_eq!(by_id(CaseId::AIII), density("3/2*h1*pi*omega_3", 4));
    assert_eq!(by_id(CaseId::B), density("9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3", 4));
    assert_eq!(by_id(CaseId::C), density("-9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3", 4));
    let values: Vec<_> = cases.iter().map(|c| c.value.clone()).collect();
    assert_eq!(boundary_total(&values), density("-8*thetap_n*pi*omega_3", 4));
    // Per-source ledgers add up to the case value.
    for c in &cases {
        let sum = c.terms.iter().fold(BoundaryDensity::zero(4), |acc, (_, v)| &acc + v);
        assert_eq!(sum, c.value, "{:?}", c.case.id);
    }
}

#[test]
fn square_pairing_cancels() {
    let report = verify_suite(SuiteId::Kkw4Sq);
    assert!(report.all_match(), "{report}");
    assert_eq!(report.case("total").unwrap().computed, "0");
}

#[test]
fn flipped_b02_is_caught_in_case_b() {
    let report = verify_suite_with(SuiteId::Kkw4, &SuiteOptions { flip_b02: true, ..Default::default() });
    assert!(!report.all_match());
    let b = report.case("b)").unwrap();
    assert!(!b.matched);
    let ledger = b.terms.iter().find(|t| t.source == "b02").expect("b02 ledger entry");
    assert_eq!(ledger.value, "-3*h1*pi*omega_3");
    // Cases without σ₀ of the inverse are untouched.
    for id in ["a)I", "a)II", "a)III"] {
        assert!(report.case(id).unwrap().matched, "{id}");
    }
}

#[test]
fn case_enumeration() {
    for (n, p2) in [(4usize, 1i32), (6, 3)] {
        let cases = enumerate_cases(n, 1, p2).unwrap();
        assert_eq!(cases.len(), 5);
        for c in &cases {
            assert_eq!(c.r + c.l - c.j as i32 - c.k as i32 - c.alpha as i32, 1 - n as i32);
        }
    }
    assert!(matches!(enumerate_cases(5, 1, 1), Err(KkwError::UnsupportedConfiguration { .. })));
}

#[test]
fn interior_prefactors_and_validation() {
    assert_eq!(wres_prefactor(4).unwrap().1, 2);
    assert_eq!(wres_prefactor(6).unwrap().1, 3);
    assert!(matches!(wres_prefactor(5), Err(KkwError::OddDimension(5))));
    let d = interior_integrand(InteriorVariant::Square, 4).unwrap();
    assert_eq!(d.prefactor_poly().to_string(), "32*pi^2");
    assert!(verify_suite(SuiteId::Interior).all_match());
}

#[test]
fn lemma_suite_partial_agreement() {
    let report = verify_suite_with(SuiteId::Lemmas, &SuiteOptions { dim: Some(4), ..Default::default() });
    assert!(report.all_match(), "{report}");
    let six = verify_suite_with(SuiteId::Lemmas, &SuiteOptions { dim: Some(6), ..Default::default() });
    for c in &six.cases {
        assert_eq!(c.matched, !c.id.starts_with("sigma2"), "{}", c.id);
    }
}
