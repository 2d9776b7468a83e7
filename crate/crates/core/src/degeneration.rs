//! Nodal rational curves degenerating to cuspidal ones.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::gcd::gcd;
use crate::algebra::{parametric_laurent, parse_poly, Poly, RationalFunction, Scalar, UPoly};
use crate::curves::{Chart, Differential, Semigroup};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, Matrix};

pub const EPS: &str = "eps";

fn ctx() -> Arc<[String]> {
    vec!["u".to_string(), EPS.to_string()].into()
}

/// Pairs of points `(b_i(ε), c_i(ε))` in the `z` chart identified to nodes,
/// and a rescaling matrix `η_i = Σ_j R_ij ω_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct NodalFamily {
    pub pairs: Vec<(Poly, Poly)>,
    pub rescalings: Vec<Vec<RationalFunction>>,
}

fn eps_poly(s: &str) -> Poly {
    parse_poly(s, &[EPS]).unwrap().with_vars(&ctx()).unwrap()
}

fn pairs_from(spec: &[(i64, i64)]) -> Vec<(Poly, Poly)> {
    spec.iter()
        .map(|&(a, s)| (eps_poly(&format!("{a} + {s}*{EPS}")), eps_poly(&format!("{a} - {s}*{EPS}"))))
        .collect()
}

fn rescaling(coeffs: &[i64], power: u32, g: usize, offset: usize) -> Vec<RationalFunction> {
    let e = Poly::var(ctx(), EPS).unwrap().pow(power);
    let mut row = vec![RationalFunction::zero(ctx()); g];
    for (j, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            row[offset + j] = RationalFunction::new(Poly::constant(ctx(), Scalar::from_int(c)), e.clone()).unwrap();
        }
    }
    row
}

impl NodalFamily {
    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    /// Pairs `1 ± 2ε, 1 ± ε, −1 ± 2ε, −1 ± ε` with the rescalings
    /// `ω₁/ε, (2ω₂ − ω₁)/ε³` and their mirrors.
    pub fn genus4() -> Self {
        let pairs = pairs_from(&[(1, 2), (1, 1), (-1, 2), (-1, 1)]);
        let rescalings = vec![
            rescaling(&[1], 1, 4, 0),
            rescaling(&[-1, 2], 3, 4, 0),
            rescaling(&[1], 1, 4, 2),
            rescaling(&[-1, 2], 3, 4, 2),
        ];
        NodalFamily { pairs, rescalings }
    }

    /// Pairs `±1 ± 3ε, ±1 ± 2ε, ±1 ± ε`; rescalings from [`reduced_rescalings`].
    pub fn genus6() -> Result<Self> {
        let mut f = NodalFamily { pairs: pairs_from(&[(1, 3), (1, 2), (1, 1), (-1, 3), (-1, 2), (-1, 1)]), rescalings: vec![] };
        f.rescalings = reduced_rescalings(&f)?.into_iter().map(|r| r.row).collect();
        Ok(f)
    }

    /// Pairwise distinct points at a concrete `ε`.
    pub fn is_generic_at(&self, eps: &Scalar) -> bool {
        let pts: Vec<Scalar> = self
            .pairs
            .iter()
            .flat_map(|(b, c)| [b, c])
            .map(|p| p.eval_named(&[("u", Scalar::zero()), (EPS, eps.clone())]).unwrap())
            .collect();
        (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| pts[i] != pts[j]))
    }
}

/// `ω_i = (b_i − c_i) / ((1 − b_i u)(1 − c_i u)) du`.
pub fn family_differentials(f: &NodalFamily) -> Vec<Differential> {
    let u = Poly::var(ctx(), "u").unwrap();
    let one = Poly::one(ctx());
    f.pairs
        .iter()
        .map(|(b, c)| {
            let b = b.with_vars(&ctx()).unwrap();
            let c = c.with_vars(&ctx()).unwrap();
            let den = one.sub(&b.mul(&u)).mul(&one.sub(&c.mul(&u)));
            Differential::new(Chart::U, RationalFunction::new(b.sub(&c), den).unwrap())
        })
        .collect()
}

/// The family's differentials at a concrete `ε`.
pub fn family_differentials_at(f: &NodalFamily, eps: &Scalar) -> Result<Vec<Differential>> {
    let uctx: Arc<[String]> = vec!["u".to_string()].into();
    family_differentials(f)
        .into_iter()
        .map(|d| Ok(Differential::new(Chart::U, d.g.eval_var(EPS, eps)?.with_vars(&uctx)?)))
        .collect()
}

fn limit_at_zero(f: &RationalFunction) -> Result<RationalFunction> {
    let uctx: Arc<[String]> = vec!["u".to_string()].into();
    let den0 = f.den().eval_var(EPS, &Scalar::zero());
    if den0.is_zero() {
        return Err(Error::DivergentLimit(format!("{f} has a pole at {EPS} = 0")));
    }
    let num0 = f.num().eval_var(EPS, &Scalar::zero());
    RationalFunction::new(num0, den0)?.with_vars(&uctx)
}

/// Applies the rescaling matrix and takes `ε → 0` exactly.
pub fn rescale_and_limit(f: &NodalFamily) -> Result<Vec<Differential>> {
    let omegas = family_differentials(f);
    f.rescalings
        .iter()
        .map(|row| {
            let mut eta = RationalFunction::zero(ctx());
            for (r, w) in row.iter().zip(&omegas) {
                if !r.is_zero() {
                    eta = eta.add(&r.with_vars(&ctx())?.mul(&w.g));
                }
            }
            Ok(Differential::new(Chart::U, limit_at_zero(&eta)?))
        })
        .collect()
}

/// A rescaled combination `Σ c_j ω_j / ε^order` and its limit.
#[derive(Clone, Debug)]
pub struct Rescaling {
    pub coeffs: Vec<Scalar>,
    pub order: u32,
    pub row: Vec<RationalFunction>,
    pub limit: Differential,
}

/// Coefficient vectors (in a shared monomial basis) of rational functions
/// of `u`, as columns of a matrix.
fn columns(fs: &[RationalFunction]) -> Matrix {
    let uctx: Arc<[String]> = vec!["u".to_string()].into();
    let mut l = Poly::one(uctx.clone());
    let fs: Vec<RationalFunction> = fs.iter().map(|f| f.with_vars(&uctx).unwrap()).collect();
    for f in &fs {
        let g = gcd(&l, f.den());
        l = l.mul(&f.den().div_exact(&g).unwrap());
    }
    let nums: Vec<Poly> = fs.iter().map(|f| f.num().mul(&l.div_exact(f.den()).unwrap())).collect();
    let deg = nums.iter().filter_map(|n| n.total_degree()).max().unwrap_or(0) as usize;
    (0..=deg).map(|e| nums.iter().map(|n| n.coeff(&[e as u32])).collect()).collect()
}

/// Integer vector with content 1 and positive last nonzero entry.
fn primitive_vector(v: Vec<Scalar>) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let ints: Vec<Scalar> = v.iter().map(|c| c.scale_int(&den)).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(&c.re().to_integer()));
    if content.is_zero() {
        return v;
    }
    let neg = ints.iter().rev().find(|c| !c.is_zero()).and_then(Scalar::real_sign) == Some(std::cmp::Ordering::Less);
    let k = Scalar::from_bigint(if neg { -content } else { content }).inv().unwrap();
    ints.iter().map(|c| c * &k).collect()
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    e[i] = 1;
    e
}

/// Valuation-reduced rescalings: combinations of the nodal differentials
/// whose `ε`-expansions start as late as possible, found by filtering the
/// coefficient space order by order in `ε`.
pub fn reduced_rescalings(f: &NodalFamily) -> Result<Vec<Rescaling>> {
    let g = f.genus();
    let omegas = family_differentials(f);
    let max_order = 4 * g + 2;
    let series: Vec<(i64, Vec<RationalFunction>)> =
        omegas.iter().map(|w| parametric_laurent(&w.g, EPS, max_order + 1)).collect();
    let coeff_at = |j: usize, k: i64| -> RationalFunction {
        let (v, cs) = &series[j];
        let idx = k - v;
        if idx < 0 {
            RationalFunction::zero(ctx())
        } else {
            cs.get(idx as usize).cloned().unwrap_or_else(|| RationalFunction::zero(ctx()))
        }
    };
    let mut space: Vec<Vec<Scalar>> = (0..g).map(|i| unit(g, i).into_iter().map(|e| Scalar::from_int(e as i64)).collect()).collect();
    let mut picked: Vec<Rescaling> = Vec::new();
    let start = series.iter().map(|(v, _)| *v).min().unwrap_or(0);
    let mut k = start;
    while !space.is_empty() {
        if k > start + max_order as i64 {
            return Err(Error::DivergentLimit("no finite rescaling basis within the expansion order".into()));
        }
        let images: Vec<RationalFunction> = space
            .iter()
            .map(|c| {
                c.iter().enumerate().fold(RationalFunction::zero(ctx()), |acc, (j, cj)| {
                    if cj.is_zero() { acc } else { acc.add(&coeff_at(j, k).scale(cj)) }
                })
            })
            .collect();
        let m = columns(&images);
        let kernel = nullspace(&m, space.len());
        let next: Vec<Vec<Scalar>> = kernel
            .iter()
            .map(|a| {
                let v = (0..g)
                    .map(|j| a.iter().zip(&space).fold(Scalar::zero(), |acc, (ai, c)| &acc + &(ai * &c[j])))
                    .collect();
                primitive_vector(v)
            })
            .collect();
        let mut span = next.clone();
        for c in &space {
            let mut trial = span.clone();
            trial.push(c.clone());
            if rank(&trial, g) > rank(&span, g) {
                span = trial;
                let order = k.max(0) as u32;
                let limit = c.iter().enumerate().fold(RationalFunction::zero(ctx()), |acc, (j, cj)| {
                    if cj.is_zero() { acc } else { acc.add(&coeff_at(j, k).scale(cj)) }
                });
                let e = Poly::var(ctx(), EPS).unwrap().pow(order);
                let row = c
                    .iter()
                    .map(|cj| RationalFunction::new(Poly::constant(ctx(), cj.clone()), e.clone()).unwrap())
                    .collect();
                let uctx: Arc<[String]> = vec!["u".to_string()].into();
                picked.push(Rescaling {
                    coeffs: c.clone(),
                    order,
                    row,
                    limit: Differential::new(Chart::U, limit.with_vars(&uctx)?),
                });
            }
        }
        space = next;
        k += 1;
    }
    // group by the cusp each combination degenerates to, then by order
    let cusp_of = |r: &Rescaling| -> usize {
        let j = r.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let at = f.pairs[j].0.eval_named(&[("u", Scalar::zero()), (EPS, Scalar::zero())]).unwrap();
        f.pairs.iter().map(|(b, _)| b.eval_named(&[("u", Scalar::zero()), (EPS, Scalar::zero())]).unwrap()).position(|p| p == at).unwrap()
    };
    picked.sort_by_key(|r| (cusp_of(r), r.order));
    Ok(picked)
}

/// Result of checking the planar model `x = t², y = t⁵ − 5ε²t³ + 4ε⁴t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalModelReport {
    pub eps: Scalar,
    /// Parameter values `t > 0` with `(x, y)(t) = (x, y)(−t)`.
    pub node_params: Vec<Scalar>,
    pub semigroup: Option<Vec<u32>>,
}

fn model_y(eps: &Scalar) -> UPoly {
    let e2 = eps * eps;
    let e4 = &e2 * &e2;
    UPoly::new(vec![
        Scalar::zero(),
        e4.scale_int(&4.into()),
        Scalar::zero(),
        -e2.scale_int(&5.into()),
        Scalar::zero(),
        Scalar::one(),
    ])
}

/// Two nodes at `t = ±ε, ±2ε` for `ε ≠ 0`, and the `⟨2,5⟩` cusp at `ε = 0`.
pub fn local_model_check(eps_values: &[Scalar]) -> Result<Vec<LocalModelReport>> {
    let mut out = Vec::new();
    for eps in eps_values {
        if !eps.is_real() {
            return Err(Error::ModelMismatch(format!("ε = {eps} is not real")));
        }
        let y = model_y(eps);
        if eps.is_zero() {
            if y.coeffs().iter().take(5).any(|c| !c.is_zero()) {
                return Err(Error::ModelMismatch("y is not t^5 at ε = 0".into()));
            }
            let s = Semigroup::new(&[2, 5])?;
            out.push(LocalModelReport { eps: eps.clone(), node_params: vec![], semigroup: Some(s.generators().to_vec()) });
            continue;
        }
        // x(t) = x(t') with t ≠ t' forces t' = −t; y odd, so nodes are the nonzero roots of y
        let (roots, rest) = y.divrem(&UPoly::new(vec![Scalar::zero(), Scalar::one()])).0.rational_roots();
        if rest.degree().unwrap_or(0) > 0 || roots.iter().any(|(_, m)| *m != 1) {
            return Err(Error::ModelMismatch(format!("y/t does not split into simple roots at ε = {eps}")));
        }
        let mut pos: Vec<Scalar> = roots.into_iter().map(|(r, _)| r).filter(|r| r.real_sign() == Some(std::cmp::Ordering::Greater)).collect();
        pos.sort_by(|a, b| a.re().cmp(b.re()));
        let abs = if eps.real_sign() == Some(std::cmp::Ordering::Less) { -eps.clone() } else { eps.clone() };
        if pos != vec![abs.clone(), abs.scale_int(&2.into())] {
            return Err(Error::ModelMismatch(format!("nodes at t = {pos:?}, expected ±{abs}, ±2·{abs}")));
        }
        out.push(LocalModelReport { eps: eps.clone(), node_params: pos, semigroup: None });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_y_shape() {
        let y = model_y(&Scalar::from_int(1));
        assert_eq!(y.eval(&Scalar::from_int(2)), Scalar::zero());
        assert_eq!(y.eval(&Scalar::from_int(3)), Scalar::from_int(243 - 135 + 12));
    }
}
