use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cusplump::algebra::{Poly, RationalFunction};

use crate::error::{CliError, Result};

pub const DENOMINATOR_FLOOR: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub times: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { x_range: (-10.0, 10.0), y_range: (-10.0, 10.0), nx: 201, ny: 201, times: vec![-1.375] }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.times.is_empty() {
            return Err(CliError::EmptyGrid("no time values".into()));
        }
        if self.nx < 2 || self.ny < 2 {
            return Err(CliError::InvalidGrid(format!("{}x{} samples, need at least 2x2", self.nx, self.ny)));
        }
        let ok = |(a, b): (f64, f64)| a.is_finite() && b.is_finite() && a < b;
        if !ok(self.x_range) || !ok(self.y_range) {
            return Err(CliError::InvalidGrid("ranges must be finite with lo < hi".into()));
        }
        Ok(())
    }

    pub fn x(&self, i: usize) -> f64 {
        let (a, b) = self.x_range;
        a + (b - a) * i as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        let (a, b) = self.y_range;
        a + (b - a) * j as f64 / (self.ny - 1) as f64
    }
}

/// A polynomial in `(x, y, t)` with double coefficients.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    terms: Vec<([u32; 3], f64)>,
}

impl FloatPoly {
    pub fn new(p: &Poly) -> Self {
        let ix = ["x", "y", "t"].map(|v| p.var_index(v));
        let terms = p
            .terms()
            .map(|(m, c)| {
                let e = ix.map(|i| i.map_or(0, |i| m.0[i]));
                (e, c.to_f64().0)
            })
            .collect();
        FloatPoly { terms }
    }

    pub fn eval(&self, x: f64, y: f64, t: f64) -> f64 {
        self.terms.iter().map(|(e, c)| c * x.powi(e[0] as i32) * y.powi(e[1] as i32) * t.powi(e[2] as i32)).sum()
    }
}

/// `u` in double precision, from a tau function or an expanded rational function.
#[derive(Clone, Debug)]
pub enum FloatField {
    /// `u = 2(τ_xx/τ − (τ_x/τ)²)`, much less cancellation than the expanded quotient.
    Tau { tau: FloatPoly, tx: FloatPoly, txx: FloatPoly },
    Rational { num: FloatPoly, den: FloatPoly },
}

impl FloatField {
    pub fn from_tau(tau: &Poly) -> Self {
        let tx = tau.derivative("x");
        let txx = tx.derivative("x");
        FloatField::Tau { tau: FloatPoly::new(tau), tx: FloatPoly::new(&tx), txx: FloatPoly::new(&txx) }
    }

    pub fn from_rational(u: &RationalFunction) -> Self {
        FloatField::Rational { num: FloatPoly::new(u.num()), den: FloatPoly::new(u.den()) }
    }

    /// `(value, denominator)`; for a tau the denominator reported is `τ`.
    pub fn eval(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        match self {
            FloatField::Tau { tau, tx, txx } => {
                let d = tau.eval(x, y, t);
                let a = tx.eval(x, y, t) / d;
                (2.0 * (txx.eval(x, y, t) / d - a * a), d)
            }
            FloatField::Rational { num, den } => {
                let d = den.eval(x, y, t);
                (num.eval(x, y, t) / d, d)
            }
        }
    }

    fn den(&self, x: f64, y: f64, t: f64) -> f64 {
        self.eval(x, y, t).1
    }
}

/// Samples of `u` at one time; `values[j * nx + i]` is at `(x_i, y_j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSlice {
    pub t: f64,
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<f64>,
    pub min_abs_den: f64,
}

fn eval_row(u: &FloatField, g: &GridSpec, t: f64, j: usize) -> (Vec<f64>, f64) {
    let y = g.y(j);
    let mut row = Vec::with_capacity(g.nx);
    let mut min_den = f64::INFINITY;
    for i in 0..g.nx {
        let (v, d) = u.eval(g.x(i), y, t);
        min_den = min_den.min(d.abs());
        row.push(v);
    }
    (row, min_den)
}

/// Evaluates `u` on the grid, rows in parallel.
///
/// Without a certificate the caller must pass `allow_unverified`; with it,
/// near-zero denominators are reported rather than rejected.
pub fn evaluate_grid(f: &FloatField, g: &GridSpec, certified: bool, allow_unverified: bool) -> Result<Vec<GridSlice>> {
    g.validate()?;
    if !certified && !allow_unverified {
        return Err(CliError::Unverified);
    }
    let mut out = Vec::with_capacity(g.times.len());
    for &t in &g.times {
        let rows: Vec<(Vec<f64>, f64)> = (0..g.ny).into_par_iter().map(|j| eval_row(f, g, t, j)).collect();
        let min_abs_den = rows.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
        if min_abs_den < DENOMINATOR_FLOOR && !allow_unverified {
            let (j, i) = (0..g.ny)
                .flat_map(|j| (0..g.nx).map(move |i| (j, i)))
                .find(|&(j, i)| f.den(g.x(i), g.y(j), t).abs() < DENOMINATOR_FLOOR)
                .unwrap();
            return Err(CliError::DenominatorVanished { x: g.x(i), y: g.y(j), t, value: min_abs_den });
        }
        let values = rows.into_iter().flat_map(|r| r.0).collect();
        out.push(GridSlice { t, nx: g.nx, ny: g.ny, values, min_abs_den });
    }
    Ok(out)
}
