use cusplump::algebra::{parse_rational, Poly, RationalFunction, Scalar};
use cusplump::curves::{basis_from_override, bicuspidal_override, ChartPoint, Chart, CurveSpec, Differential};
use cusplump::algebra::Point;
use cusplump::degeneration::{
    family_differentials, family_differentials_at, local_model_check, reduced_rescalings, rescale_and_limit,
    NodalFamily, EPS,
};
use cusplump::tau::frame_rows;
use cusplump::Error;

fn ud(s: &str) -> Differential {
    Differential::parse(Chart::U, s).unwrap()
}

#[test]
fn nodal_differentials() {
    let f = NodalFamily::genus4();
    let ws = family_differentials(&f);
    let want = parse_rational("4*eps/((1 - (1 + 2*eps)*u)*(1 - (1 - 2*eps)*u))", &["u", EPS]).unwrap();
    assert_eq!(ws[0].g, want);
    let want = parse_rational("2*eps/((1 - (1 + eps)*u)*(1 - (1 - eps)*u))", &["u", EPS]).unwrap();
    assert_eq!(ws[1].g, want);
    let at0 = family_differentials_at(&f, &Scalar::from_int(0)).unwrap();
    assert!(at0.iter().all(Differential::is_zero));
    assert!(f.is_generic_at(&Scalar::ratio(1, 10)));
    assert!(!f.is_generic_at(&Scalar::from_int(0)));
}

#[test]
fn genus4_limits() {
    let lim = rescale_and_limit(&NodalFamily::genus4()).unwrap();
    let want: Vec<Differential> = bicuspidal_override();
    assert_eq!(lim, want);
    assert_eq!(lim[0], ud("4/(u-1)^2"));
    assert_eq!(lim[1], ud("-12*u^2/(u-1)^4"));
}

#[test]
fn over_rescaled_diverges() {
    let mut f = NodalFamily::genus4();
    let e2 = Poly::var(f.rescalings[0][0].vars().clone(), EPS).unwrap().pow(2);
    f.rescalings[0][0] = RationalFunction::new(Poly::one(e2.vars().clone()), e2).unwrap();
    assert!(matches!(rescale_and_limit(&f), Err(Error::DivergentLimit(_))));
}

#[test]
fn reduced_rescalings_reproduce_genus4() {
    let f = NodalFamily::genus4();
    let r = reduced_rescalings(&f).unwrap();
    let orders: Vec<u32> = r.iter().map(|x| x.order).collect();
    assert_eq!(orders, vec![1, 3, 1, 3]);
    let rows: Vec<Vec<RationalFunction>> = r.iter().map(|x| x.row.clone()).collect();
    let hard = NodalFamily::genus4();
    for (a, b) in rows.iter().zip(&hard.rescalings) {
        for (x, y) in a.iter().zip(b) {
            assert_eq!(x.is_zero(), y.is_zero());
            if !x.is_zero() {
                assert_eq!(x.with_vars(y.vars()).unwrap(), *y);
            }
        }
    }
}

#[test]
fn genus6_family() {
    let f = NodalFamily::genus6().unwrap();
    let lim = rescale_and_limit(&f).unwrap();
    assert_eq!(lim.len(), 6);
    let mut orders = Vec::new();
    for d in &lim {
        let poles = d.poles().unwrap();
        assert_eq!(poles.len(), 1, "{d}");
        let (p, k) = &poles[0];
        let z = p.in_chart(Chart::U);
        assert!(z == Point::Finite(Scalar::from_int(1)) || z == Point::Finite(Scalar::from_int(-1)));
        orders.push(*k);
        assert!(d.residue(p).unwrap() == Scalar::from_int(0));
    }
    assert_eq!(orders, vec![2, 4, 6, 2, 4, 6]);
    let c = CurveSpec::bicuspidal_a_even(3);
    assert_eq!(c.genus(), 6);
    let basis = basis_from_override(&c, &lim).unwrap();
    assert_eq!(basis.len(), 6);
}

#[test]
fn frame_rows_commute_with_limit() {
    let f = NodalFamily::genus4();
    let at = ChartPoint::new(Chart::U, Point::Finite(Scalar::from_int(0)));
    let c = CurveSpec::bicuspidal();
    let limit_rows = frame_rows(&basis_from_override(&c, &rescale_and_limit(&f).unwrap()).unwrap(), &at, 4).unwrap();
    // rows of ω_j at u = 0 are (b^{k+1} − c^{k+1}); rescale and let ε → 0
    let omegas = family_differentials(&f);
    for (i, row) in f.rescalings.iter().enumerate() {
        for k in 0..4usize {
            let mut acc = RationalFunction::zero(row[0].vars().clone());
            for (r, w) in row.iter().zip(&omegas) {
                if r.is_zero() {
                    continue;
                }
                let (v, cs) = cusplump::algebra::parametric_laurent(&w.g, "u", k + 1);
                assert_eq!(v, 0);
                acc = acc.add(&r.mul(&cs[k]));
            }
            let lim = acc.eval_var(EPS, &Scalar::from_int(0)).unwrap();
            assert_eq!(lim.num().constant_term(), limit_rows.rows[i][k]);
        }
    }
}

#[test]
fn local_model() {
    let reps = local_model_check(&[Scalar::ratio(1, 3), Scalar::from_int(-2), Scalar::from_int(0)]).unwrap();
    assert_eq!(reps[0].node_params, vec![Scalar::ratio(1, 3), Scalar::ratio(2, 3)]);
    assert_eq!(reps[1].node_params, vec![Scalar::from_int(2), Scalar::from_int(4)]);
    assert_eq!(reps[2].semigroup, Some(vec![2, 5]));
}
