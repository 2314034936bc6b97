use topzeta::algebra::rational::int;
use topzeta::family::{
    end_to_end_instance_check, family_polynomial, singular_local_equations, symbolic_quadruple, CandidatePole,
    FamilyParams,
};
use topzeta::nondeg::{is_nondegenerate, Verdict};
use topzeta::zeta::zeta_local;
use topzeta::{ratfunc_equal, zeta_combine, Error};

fn values(p: &FamilyParams) -> Vec<(&'static str, topzeta::Rational)> {
    p.values()
}

#[test]
fn unit_instance() {
    let p = FamilyParams::with_default_roots(1, 1, 1, 1, 1, 1).unwrap();
    assert_eq!(family_polynomial(&p).unwrap().to_string(), "x^2*y^2*z + x*y*z^3");
    let z = zeta_local(&family_polynomial(&p).unwrap()).unwrap();
    assert_eq!(zeta_combine(&z).to_string(), "(-2*s^2+9*s+9)/((s+1)^2*(5*s+3)^2)");
    let rep = end_to_end_instance_check(&p).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.candidate, CandidatePole::CoincidesWithChartPole);
}

#[test]
fn chart_zetas_match_closed_forms_with_other_roots() {
    let lambdas = vec![int(-1), int(3), topzeta::algebra::rational::rat(1, 2)];
    let p = FamilyParams::new(3, 2, 3, 1, 0, 1, lambdas).unwrap();
    let q = symbolic_quadruple();
    let v = values(&p);
    let (h1, h2) = singular_local_equations(&p).unwrap();
    assert!(ratfunc_equal(
        &zeta_local(&h1).unwrap(),
        &q.z1.specialize(v.iter().map(|(n, x)| (*n, x))).unwrap()
    ));
    assert!(ratfunc_equal(
        &zeta_local(&h2).unwrap(),
        &q.z2.specialize(v.iter().map(|(n, x)| (*n, x))).unwrap()
    ));
    assert!(end_to_end_instance_check(&p).unwrap().passed());
    assert_eq!(
        is_nondegenerate(&family_polynomial(&p).unwrap()).unwrap().overall,
        Verdict::Nondegenerate
    );
}

#[test]
fn repeated_roots_are_rejected() {
    let err = FamilyParams::new(2, 3, 2, 0, 0, 0, vec![int(1), int(1)]).unwrap_err();
    assert!(matches!(err, Error::InvalidParams(_)));
}

#[test]
fn smooth_conic_keeps_its_pole() {
    // d = 2: both charts are smooth and -3/2 is a genuine pole of x*y + z^2
    let p = FamilyParams::with_default_roots(1, 1, 1, 0, 0, 0).unwrap();
    let rep = end_to_end_instance_check(&p).unwrap();
    assert_eq!(rep.candidate, CandidatePole::Present);
    assert!(!rep.poles_explained);
    assert!(rep.facet_table && rep.zeta_matches && rep.charts_match);
    assert_eq!(rep.poles.to_string(), "-1 (order 1), -3/2 (order 1)");
}
