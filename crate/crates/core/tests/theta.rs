use std::time::Instant;

use cusplump::algebra::parse_poly;
use cusplump::fixtures;
use cusplump::curves::{basis_from_override, bicuspidal_override, CurveSpec};
use cusplump::groebner::Budget;
use cusplump::theta::{
    check_degree_bound, check_leading_term, check_membership, mirror_symmetry_sign, theta_for_curve, Strategy,
};

const Z4: [&str; 4] = ["Z1", "Z2", "Z3", "Z4"];

#[test]
fn monomial_456() {
    let c = CurveSpec::monomial_456();
    let r = theta_for_curve(&c, None, Strategy::Sym, &Budget::default()).unwrap();
    let want = parse_poly("Z1^7 + 21*Z1^4*Z3 - 84*Z1^3*Z2^2 + 252*Z1*Z3^2 + 252*Z2^2*Z3 - 252*Z4", &Z4).unwrap();
    let got = &r.theta.poly;
    assert!(got == &want || got == &want.neg(), "{got}");
    assert!(check_membership(got, &r.param).vanishes);
}

#[test]
fn bicuspidal_strategies_agree() {
    let c = CurveSpec::bicuspidal();
    let b = basis_from_override(&c, &bicuspidal_override()).unwrap();
    let want = fixtures::bicuspidal_theta();
    for s in [Strategy::Sym, Strategy::Lex] {
        let t0 = Instant::now();
        let r = theta_for_curve(&c, Some(b.clone()), s, &Budget::default()).unwrap();
        eprintln!("{s:?}: {:?} {:?}", t0.elapsed(), r.stats);
        assert_eq!(r.theta.poly, want, "{s:?}");
        assert_eq!(r.theta.poly.len(), 24);
        check_degree_bound(&r.theta, &c).unwrap();
        check_leading_term(&r.theta, &b, &c).unwrap();
        assert!(mirror_symmetry_sign(&r.theta.poly).is_some());
    }
    let err = theta_for_curve(&c, Some(b), Strategy::Res, &Budget::default()).unwrap_err();
    assert!(matches!(err, cusplump::Error::StrategyUnsupported(_)));
}

#[test]
fn perturbed_coefficient_fails_membership() {
    let c = CurveSpec::bicuspidal();
    let b = basis_from_override(&c, &bicuspidal_override()).unwrap();
    let p = cusplump::theta::build_parametrization(&b, &c.basepoint.at).unwrap();
    let good = fixtures::bicuspidal_theta();
    assert!(check_membership(&good, &p).vanishes);
    let bad = parse_poly(&fixtures::BICUSPIDAL_THETA.replace("336*Z1^3", "337*Z1^3"), &Z4).unwrap();
    assert!(!check_membership(&bad, &p).vanishes);
}

#[test]
fn small_genus() {
    let c = CurveSpec::single_cusp(&[2, 3], 1).unwrap();
    let r = theta_for_curve(&c, None, Strategy::Lex, &Budget::default()).unwrap();
    assert_eq!(r.theta.degree, 1);
    let c = CurveSpec::single_cusp(&[2, 5], 1).unwrap();
    for s in [Strategy::Lex, Strategy::Sym, Strategy::Res] {
        let r = theta_for_curve(&c, None, s, &Budget::default()).unwrap();
        assert_eq!(r.theta.degree, 3, "{s:?}");
        check_degree_bound(&r.theta, &c).unwrap();
        check_leading_term(&r.theta, &r.param.basis, &c).unwrap();
    }
}

#[test]
fn genus_two_bicuspidal_by_resultant() {
    let c = CurveSpec::bicuspidal_a_even(1);
    let a = theta_for_curve(&c, None, Strategy::Res, &Budget::default()).unwrap();
    let b = theta_for_curve(&c, None, Strategy::Sym, &Budget::default()).unwrap();
    assert_eq!(a.theta.poly, b.theta.poly);
    assert!(check_membership(&a.theta.poly, &a.param).vanishes);
}

#[test]
fn rearranged_form_expands_to_theta() {
    assert_eq!(fixtures::bicuspidal_rearranged(), fixtures::bicuspidal_theta());
}
