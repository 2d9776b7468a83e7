use std::time::Instant;

use cusplump::algebra::{parse_poly, parse_rational, Poly, Scalar};
use cusplump::curves::{basis_from_override, bicuspidal_override, CurveBasis, CurveSpec, Singularity};
use cusplump::fixtures;
use cusplump::groebner::Budget;
use cusplump::tau::{
    decay_check, frame_rows, kp1_residual, real_tau, solve_phases, sos_certify, symbolic_phases, tau_from_theta,
    tau_substitute, u_from_tau, FrameRows,
};
use cusplump::theta::{theta_for_curve, Strategy, ThetaPolynomial};
use cusplump::Error;

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&k| Scalar::from_int(k)).collect()
}

fn setup() -> (CurveSpec, CurveBasis, ThetaPolynomial, FrameRows) {
    let c = CurveSpec::bicuspidal();
    let b = basis_from_override(&c, &bicuspidal_override()).unwrap();
    let rows = frame_rows(&b, &c.expansion_point, 3).unwrap();
    (c, b, ThetaPolynomial::new(fixtures::bicuspidal_theta()), rows)
}

#[test]
fn frame_coefficients() {
    let (_, _, _, rows) = setup();
    let want: Vec<Vec<Scalar>> = [[4, 8, 12], [0, 0, -12], [4, -8, 12], [0, 0, -12]].iter().map(|r| ints(r)).collect();
    assert_eq!(rows.rows, want);
}

#[test]
fn symbolic_substitution_coefficients() {
    let (_, _, theta, rows) = setup();
    // normalized like the real tau: x^6 coefficient 1
    let sub = tau_substitute(&theta, &rows, &symbolic_phases(4)).scale(&Scalar::ratio(1, 4096));
    let vars = ["phi1", "phi2", "phi3", "phi4"];
    let y5 = sub.collect(&["x", "y", "t"]).remove(&vec![0, 5, 0]).unwrap();
    let want = parse_poly("(-24*phi1 + 24*phi3 + 384)*i", &vars).unwrap();
    assert_eq!(y5, want);
    let phi3 = Poly::var(sub.vars().clone(), "phi3").unwrap();
    let imposed = sub.substitute(&[("phi1", phi3.add(&Poly::scalar(Scalar::from_int(16))))]);
    let y3 = imposed.collect(&["x", "y", "t"]).remove(&vec![0, 3, 0]).unwrap();
    assert_eq!(y3, parse_poly("(44 - 2*phi4 + 2*phi2)*i", &vars).unwrap());
    let zero = tau_substitute(&theta, &rows, &cusplump::tau::constant_phases(&ints(&[0, 0, 0, 0])));
    assert!(zero.constant_term() == Scalar::from_int(0));
}

#[test]
fn conjugation_mirrors_y() {
    let (_, _, theta, rows) = setup();
    let sub = tau_substitute(&theta, &rows, &symbolic_phases(4));
    let ctx = sub.vars().clone();
    let flipped = sub.substitute(&[("y", Poly::var(ctx.clone(), "y").unwrap().neg())]).with_vars(&ctx).unwrap();
    assert_eq!(flipped, sub.conj());
}

#[test]
fn phases_and_real_tau() {
    let (_, _, theta, rows) = setup();
    let sub = tau_substitute(&theta, &rows, &symbolic_phases(4));
    let sol = solve_phases(&sub, 4).unwrap();
    let shown: Vec<String> = sol.constraints.iter().map(|c| c.to_string()).collect();
    assert_eq!(shown, vec!["phi1 - phi3 = 16", "phi2 - phi4 = -22"]);
    assert_eq!(sol.phases, ints(&[16, -22, 0, 0]));
    let tau = real_tau(&theta, &rows, &sol.phases).unwrap();
    assert_eq!(tau, fixtures::bicuspidal_tau());
    for (m, v) in [("x^6", "1"), ("y^6", "64"), ("t^6", "729"), ("x", "198"), ("y^2", "405")] {
        let mono = parse_poly(m, &["x", "y", "t"]).unwrap();
        let exps = mono.leading().unwrap().0.clone();
        assert_eq!(tau.coeff(&exps.0), v.parse().unwrap(), "{m}");
    }
    assert_eq!(tau.constant_term(), Scalar::ratio(513, 8));
    assert!(tau.terms().all(|(m, _)| m.0[1] % 2 == 0));
    assert!(real_tau(&theta, &rows, &ints(&[17, -22, 1, 0])).is_ok());
    assert!(matches!(real_tau(&theta, &rows, &ints(&[17, -22, 0, 0])), Err(Error::ImaginaryResidue { .. })));
}

#[test]
fn certificate() {
    let (_, b, theta, rows) = setup();
    let tau = fixtures::bicuspidal_tau();
    let cert = sos_certify(&tau, &theta, &b, &rows, &ints(&[16, -22, 0, 0]), None).unwrap();
    assert_eq!(cert.constant, Scalar::ratio(513, 8));
    assert_eq!(cert.residual_coeff, Scalar::from_int(36));
    let want = ["(4*x + 12*t + 10)^2 + 64*y^2 + 4", "(4*x + 12*t + 6)^2 + 64*y^2 + 4"];
    for (f, w) in cert.residual_factors.iter().zip(want) {
        assert_eq!(f.factor, parse_poly(w, &["x", "y", "t"]).unwrap());
        assert_eq!(f.constant, Scalar::from_int(4));
    }
    assert_eq!(cert.recombine(), tau);
    let (f, g) = cert.conjugate_pair.as_ref().unwrap();
    assert_eq!(&f.conj(), g);
}

#[test]
fn certificate_edge_cases() {
    let (_, b, theta, rows) = setup();
    let trivial = parse_poly("1 + x^2 + y^2", &["x", "y", "t"]).unwrap();
    sos_certify(&trivial, &theta, &b, &rows, &[], None).unwrap();
    let bad = parse_poly("x^2 - 1", &["x", "y", "t"]).unwrap();
    assert!(matches!(sos_certify(&bad, &theta, &b, &rows, &[], None), Err(Error::NonpositiveConstant(_))));
    let tau = fixtures::bicuspidal_tau();
    let wrong_phase = sos_certify(&tau, &theta, &b, &rows, &ints(&[17, -22, 0, 0]), None);
    assert!(matches!(wrong_phase, Err(Error::NotConjugate(_))));
    let tweaked = tau.add(&parse_poly("x^2", &["x", "y", "t"]).unwrap());
    let mismatch = sos_certify(&tweaked, &theta, &b, &rows, &ints(&[16, -22, 0, 0]), None);
    assert!(matches!(mismatch, Err(Error::RecombinationMismatch(_))));
}

#[test]
fn u_examples() {
    let one = parse_poly("1", &["x", "y", "t"]).unwrap();
    assert!(u_from_tau(&one).unwrap().is_zero());
    let u = u_from_tau(&parse_poly("1 + x^2", &["x", "y", "t"]).unwrap()).unwrap();
    assert_eq!(u, parse_rational("(4 - 4*x^2)/(1 + x^2)^2", &["x", "y", "t"]).unwrap());
    assert!(matches!(u_from_tau(&Poly::zero_in(&["x"])), Err(Error::ZeroTau)));
    assert!(kp1_residual(&u_from_tau(&one).unwrap()).is_zero());
}

#[test]
fn lump_solves_kp1() {
    let t0 = Instant::now();
    let u = u_from_tau(&fixtures::bicuspidal_tau()).unwrap();
    let r = kp1_residual(&u);
    eprintln!("kp1 residual: {:?}", t0.elapsed());
    assert!(r.is_zero());
    // a non-solution
    let v = u_from_tau(&parse_poly("1 + x^2 + y^2", &["x", "y", "t"]).unwrap()).unwrap();
    assert!(!kp1_residual(&v).is_zero());
}

#[test]
fn decay() {
    let u = u_from_tau(&fixtures::bicuspidal_tau()).unwrap();
    let rep = decay_check(&u, &Scalar::from_int(0)).unwrap();
    assert_eq!((rep.num_degree, rep.den_degree), (10, 12));
    assert!(rep.ray_ratio <= 10.0, "{rep:?}");
    let bad = parse_rational("1/(1 + x^2)", &["x", "y", "t"]).unwrap();
    assert!(matches!(decay_check(&bad, &Scalar::from_int(0)), Err(Error::DecayMismatch(_))));
    assert!(decay_check(&parse_rational("0", &["x"]).unwrap(), &Scalar::from_int(0)).unwrap().passed);
}

#[test]
fn genus_two_pipeline() {
    let c = CurveSpec::bicuspidal_a_even(1);
    assert!(matches!(c.singularities[0], Singularity::Cusp { .. }));
    let r = theta_for_curve(&c, None, Strategy::Sym, &Budget::default()).unwrap();
    let rows = frame_rows(&r.param.basis, &c.expansion_point, 3).unwrap();
    let t = tau_from_theta(&r.theta, &rows, None).unwrap();
    assert!(kp1_residual(&t.u).is_zero());
    let cert = sos_certify(&t.tau, &r.theta, &r.param.basis, &rows, &t.phases.phases, None).unwrap();
    assert_eq!(cert.recombine(), t.tau);
    eprintln!("genus 2: theta {} tau {} phases {:?}", r.theta.poly, t.tau, t.phases.constraints);
}

#[test]
fn positive_on_grid() {
    let tau = fixtures::bicuspidal_tau();
    for i in -10..=10 {
        for j in -10..=10 {
            for k in -2..=2 {
                let v = tau.eval(&ints(&[i, j, k]));
                assert!(v.is_positive_real(), "tau({i},{j},{k}) = {v}");
            }
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn u_is_scale_invariant(n in -50i64..50, d in 1i64..50) {
            prop_assume!(n != 0);
            let tau = parse_poly("1 + (x + 2*t)^2 + 4*y^2", &["x", "y", "t"]).unwrap();
            let c = Scalar::ratio(n, d);
            prop_assert_eq!(u_from_tau(&tau.scale(&c)).unwrap(), u_from_tau(&tau).unwrap());
        }

        #[test]
        fn reality_with_shifted_phases(s in -20i64..20, r in -20i64..20) {
            let (_, _, theta, rows) = setup();
            let tau = real_tau(&theta, &rows, &ints(&[16 + s, -22 + r, s, r])).unwrap();
            prop_assert!(tau.is_real());
            prop_assert!(tau.terms().all(|(m, _)| m.0[1] % 2 == 0));
        }
    }
}

#[test]
fn node_rows() {
    use cusplump::curves::{node_differential, Chart, ChartPoint, CurveBasis};
    let (b, c) = (Scalar::ratio(11, 10), Scalar::ratio(9, 10));
    let d = node_differential(&b, &c, Chart::Z, Chart::U);
    let basis = CurveBasis { chart: Chart::U, elements: vec![cusplump::curves::BasisElement { diff: d, block: 0, pole_order: 1 }] };
    let at = ChartPoint::new(Chart::U, cusplump::algebra::Point::Finite(Scalar::from_int(0)));
    let rows = frame_rows(&basis, &at, 3).unwrap();
    let want = vec![&b - &c, &(&b * &b) - &(&c * &c), &b.pow(3) - &c.pow(3)];
    assert_eq!(rows.rows[0], want);
}

#[test]
fn certificate_in_canonical_basis() {
    let c = CurveSpec::bicuspidal();
    let r = theta_for_curve(&c, None, Strategy::Sym, &Budget::default()).unwrap();
    assert_ne!(r.theta.poly, fixtures::bicuspidal_theta());
    let rows = frame_rows(&r.param.basis, &c.expansion_point, 3).unwrap();
    let t = tau_from_theta(&r.theta, &rows, None).unwrap();
    assert_eq!(t.tau, fixtures::bicuspidal_tau());
    let cert = sos_certify(&t.tau, &r.theta, &r.param.basis, &rows, &t.phases.phases, None).unwrap();
    assert_eq!(cert.recombine(), t.tau);
    assert_eq!(cert.constant, Scalar::ratio(513, 8));
}
