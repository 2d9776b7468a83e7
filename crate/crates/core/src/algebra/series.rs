//! Truncated power series and Laurent expansions of rational functions.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::RationalFunction;
use super::scalar::Scalar;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// `Σ_{k < order} coeffs[k] · (var − center)^k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TruncatedSeries {
    pub var: String,
    pub order: usize,
    pub coeffs: Vec<Scalar>,
}

impl TruncatedSeries {
    pub fn new(var: &str, coeffs: Vec<Scalar>) -> Self {
        TruncatedSeries { var: var.into(), order: coeffs.len(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        TruncatedSeries::new(&self.var, (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        TruncatedSeries::new(&self.var, out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries::new(&self.var, self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O({}^{})", parts.join(", "), self.var, self.order)
    }
}

/// Power series quotient `n/d` with `d(0) ≠ 0`, first `order` coefficients.
fn series_div(n: &UPoly, d: &UPoly, order: usize) -> Vec<Scalar> {
    let d0inv = d.coeff(0).inv().expect("nonzero constant term");
    let mut out: Vec<Scalar> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = n.coeff(k);
        for j in 1..=k.min(d.degree().unwrap_or(0)) {
            acc -= &(&d.coeff(j) * &out[k - j]);
        }
        out.push(&acc * &d0inv);
    }
    out
}

/// Taylor coefficients of a univariate `f` at `center`.
pub fn series_expand(f: &RationalFunction, var: &str, center: &Scalar, order: usize) -> Result<TruncatedSeries> {
    let (n, d) = f.as_univariate(var)?;
    let (n, d) = (n.taylor_shift(center), d.taylor_shift(center));
    if d.coeff(0).is_zero() {
        return Err(Error::PoleAtCenter(center.to_string()));
    }
    Ok(TruncatedSeries::new(var, series_div(&n, &d, order)))
}

/// Laurent expansion `(v, c)` meaning `Σ_k c[k] (var − center)^(v + k)` for a
/// univariate `f`, with `order` coefficients.
pub fn laurent_expand(f: &RationalFunction, var: &str, center: &Scalar, order: usize) -> Result<(i64, Vec<Scalar>)> {
    let (n, d) = f.as_univariate(var)?;
    if n.is_zero() {
        return Ok((0, vec![Scalar::zero(); order]));
    }
    let (n, d) = (n.taylor_shift(center), d.taylor_shift(center));
    let vn = n.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let vd = d.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let n0 = UPoly::new(n.coeffs()[vn..].to_vec());
    let d0 = UPoly::new(d.coeffs()[vd..].to_vec());
    Ok((vn as i64 - vd as i64, series_div(&n0, &d0, order)))
}

/// Laurent expansion at `var = 0` of a multivariate `f`, with coefficients that
/// are rational functions of the remaining variables: `(v, c)` meaning
/// `Σ_k c[k] var^(v + k)`.
pub fn parametric_laurent(f: &RationalFunction, var: &str, order: usize) -> (i64, Vec<RationalFunction>) {
    let vars = f.vars().clone();
    if f.is_zero() {
        return (0, vec![RationalFunction::zero(vars); order]);
    }
    let strip = |p: &Poly| -> (usize, Vec<Poly>) {
        let cs = p.coeffs_in(var);
        let v = cs.iter().position(|c| !c.is_zero()).unwrap();
        (v, cs[v..].to_vec())
    };
    let (vn, ncs) = strip(f.num());
    let (vd, dcs) = strip(f.den());
    let d0inv = RationalFunction::from_poly(dcs[0].clone()).inv().unwrap();
    let mut out: Vec<RationalFunction> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = RationalFunction::from_poly(ncs.get(k).cloned().unwrap_or_else(|| Poly::zero(vars.clone())));
        for j in 1..=k.min(dcs.len() - 1) {
            if dcs[j].is_zero() {
                continue;
            }
            acc = acc.sub(&out[k - j].mul_poly(&dcs[j]));
        }
        out.push(acc.mul(&d0inv));
    }
    (vn as i64 - vd as i64, out)
}

/// Rebuilds `Σ c_k (var − center)^k` as a polynomial in `var`.
pub fn series_to_poly(s: &TruncatedSeries, center: &Scalar) -> Poly {
    let x = Poly::variable(&s.var).sub(&Poly::constant(Poly::variable(&s.var).vars().clone(), center.clone()));
    let mut acc = Poly::zero(x.vars().clone());
    let mut pw = Poly::one(x.vars().clone());
    for c in &s.coeffs {
        acc = acc.add(&pw.scale(c));
        pw = pw.mul(&x);
    }
    acc
}

pub fn is_one(s: &TruncatedSeries) -> bool {
    s.coeffs.first().is_some_and(|c| c.is_one()) && s.coeffs.iter().skip(1).all(|c| c.is_zero())
}
