use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cusplump::algebra::{Poly, RationalFunction, Scalar};
use cusplump::fixtures;
use cusplump::tau::u_from_tau;
use cusplump::theta::DEFAULT_SEED;
use cusplump_cli::emit::write_csv;
use cusplump_cli::grid::{evaluate_grid, FloatField, GridSpec};
use cusplump_cli::lumps::detect_lumps;
use cusplump_cli::CliError;

fn lump_u() -> RationalFunction {
    u_from_tau(&fixtures::bicuspidal_tau()).unwrap()
}

fn lump() -> FloatField {
    FloatField::from_tau(&fixtures::bicuspidal_tau())
}

fn small_grid(times: Vec<f64>) -> GridSpec {
    GridSpec { nx: 41, ny: 41, times, ..GridSpec::default() }
}

#[test]
fn float_matches_exact() {
    let u = lump_u();
    let f = lump();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..100 {
        let mut q = || {
            let n: i64 = rng.gen_range(-640..=640);
            (Scalar::ratio(n, 64), n as f64 / 64.0)
        };
        let (x, xf) = q();
        let (y, yf) = q();
        let (t, tf) = q();
        let exact = u.eval_named(&[("x", x), ("y", y), ("t", t)]).unwrap();
        let e = exact.to_f64().0;
        let (v, _) = f.eval(xf, yf, tf);
        assert!((v - e).abs() <= 1e-9 * e.abs(), "{v} vs {e} at ({xf}, {yf}, {tf})");
    }
}

#[test]
fn even_in_y() {
    let g = GridSpec { times: vec![-1.375, -0.9375, -0.4375], ..GridSpec::default() };
    for s in evaluate_grid(&lump(), &g, true, false).unwrap() {
        for j in 0..g.ny {
            for i in 0..g.nx {
                let a = s.values[j * g.nx + i];
                let b = s.values[(g.ny - 1 - j) * g.nx + i];
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let u = lump();
    let g = small_grid(vec![-1.375, 0.5]);
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| evaluate_grid(&u, &g, true, false).unwrap())
    };
    let one = run(1);
    let four = run(4);
    for (a, b) in one.iter().zip(&four) {
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a.values), bits(&b.values));
    }
}

#[test]
fn csv_rows() {
    let g = GridSpec { nx: 2, ny: 2, ..GridSpec::default() };
    let s = evaluate_grid(&lump(), &g, true, false).unwrap().remove(0);
    let mut buf = Vec::new();
    write_csv(&mut buf, &s, &g).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,y,u");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("-10.0,-10.0,"));
}

#[test]
fn bad_grids() {
    let u = lump();
    let g = GridSpec { times: vec![], ..GridSpec::default() };
    assert!(matches!(evaluate_grid(&u, &g, true, false), Err(CliError::EmptyGrid(_))));
    let g = GridSpec { nx: 1, ..GridSpec::default() };
    assert!(matches!(evaluate_grid(&u, &g, true, false), Err(CliError::InvalidGrid(_))));
    assert!(matches!(evaluate_grid(&u, &GridSpec::default(), false, false), Err(CliError::Unverified)));
}

#[test]
fn zero_solution() {
    let ctx = lump_u().vars().clone();
    let zero = FloatField::from_rational(&RationalFunction::from_poly(Poly::zero(ctx)));
    let s = evaluate_grid(&zero, &small_grid(vec![0.0]), true, false).unwrap().remove(0);
    assert!(s.values.iter().all(|&v| v == 0.0));
    assert_eq!(detect_lumps(&s, &small_grid(vec![0.0]), None).count, 0);
}

#[test]
fn lump_counts() {
    let g = GridSpec { times: vec![-1.375, -0.9375, -0.4375], ..GridSpec::default() };
    let counts: Vec<usize> =
        evaluate_grid(&lump(), &g, true, false).unwrap().iter().map(|s| detect_lumps(s, &g, None).count).collect();
    assert_eq!(counts, vec![3, 2, 3]);
}

#[test]
fn vanishing_denominator() {
    let u = FloatField::from_tau(&cusplump::algebra::parse_poly("x^2 - y^2", &["x", "y", "t"]).unwrap());
    let g = small_grid(vec![0.0]);
    assert!(matches!(evaluate_grid(&u, &g, true, false), Err(CliError::DenominatorVanished { .. })));
    assert!(evaluate_grid(&u, &g, false, true).is_ok());
}
