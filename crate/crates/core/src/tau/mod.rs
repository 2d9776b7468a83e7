//! From theta polynomials to real KP1 tau functions.

pub mod kp;
pub mod sos;

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, RationalFunction, Scalar};
use crate::curves::{ChartPoint, CurveBasis};
use crate::error::{Error, Result};
use crate::linalg::{rref, solve_affine, AffineSolution};
use crate::theta::ThetaPolynomial;

pub use kp::{decay_check, kp1_residual, u_from_tau, DecayReport};
pub use sos::{sos_certify, FactorCertificate, SosCertificate, SosTemplate, WeightedSquare};

pub const SPACE_VARS: [&str; 3] = ["x", "y", "t"];

pub fn space_ctx() -> Arc<[String]> {
    SPACE_VARS.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

pub fn phase_names(g: usize) -> Vec<String> {
    (1..=g).map(|j| format!("phi{j}")).collect()
}

/// Series coefficients `a_0, a_1, …` of each basis differential at the
/// expansion point, one row per differential.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameRows {
    pub rows: Vec<Vec<Scalar>>,
}

pub fn frame_rows(basis: &CurveBasis, at: &ChartPoint, m: usize) -> Result<FrameRows> {
    let mut rows = Vec::with_capacity(basis.len());
    for e in &basis.elements {
        let (v, coeffs) = e.diff.local_expansion(at, m)?;
        if v < 0 {
            return Err(Error::PoleAtCenter(format!("{} has a pole at {at}", e.diff)));
        }
        let mut row = vec![Scalar::zero(); v as usize];
        row.extend(coeffs);
        row.truncate(m);
        row.resize(m, Scalar::zero());
        rows.push(row);
    }
    Ok(FrameRows { rows })
}

/// `Z_j ↦ a_0j x + a_1j i y + a_2j t + φ_j`. Phases may be symbolic.
pub fn tau_substitute(theta: &ThetaPolynomial, rows: &FrameRows, phases: &[Poly]) -> Poly {
    let mut ctx = space_ctx();
    for p in phases {
        ctx = crate::algebra::poly::union_vars(&ctx, p.vars());
    }
    let v = |n: &str| Poly::var(ctx.clone(), n).unwrap();
    let i = Scalar::i();
    let zvars = theta.poly.vars().clone();
    let images: Vec<Poly> = rows
        .rows
        .iter()
        .zip(phases)
        .map(|(r, ph)| {
            v("x").scale(&r[0]).add(&v("y").scale(&(&r[1] * &i))).add(&v("t").scale(&r[2])).add(&ph.with_vars(&ctx).unwrap())
        })
        .collect();
    let bindings: Vec<(&str, Poly)> = zvars.iter().map(String::as_str).zip(images).collect();
    theta.poly.substitute(&bindings).with_vars(&ctx).unwrap()
}

pub fn symbolic_phases(g: usize) -> Vec<Poly> {
    let names = phase_names(g);
    let ctx: Arc<[String]> = names.clone().into();
    names.iter().map(|n| Poly::var(ctx.clone(), n).unwrap()).collect()
}

pub fn constant_phases(values: &[Scalar]) -> Vec<Poly> {
    values.iter().map(|v| Poly::scalar(v.clone())).collect()
}

/// `Σ_k c_k φ_k = rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseConstraint {
    pub coeffs: Vec<Scalar>,
    pub rhs: Scalar,
}

impl std::fmt::Display for PhaseConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = format!("phi{}", k + 1);
            let neg = c.real_sign() == Some(std::cmp::Ordering::Less);
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = if mag == Scalar::from_int(1) { name } else { format!("{mag}*{name}") };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " = {}", self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseSolution {
    pub constraints: Vec<PhaseConstraint>,
    pub phases: Vec<Scalar>,
    pub free: Vec<usize>,
}

/// Imaginary parts of the (x, y, t)-coefficients, as polynomials in the phases.
fn imaginary_parts(p: &Poly) -> Vec<(Vec<u32>, Poly)> {
    p.collect(&SPACE_VARS)
        .into_iter()
        .map(|(k, c)| (k, c.re_im().1))
        .filter(|(_, im)| !im.is_zero())
        .collect()
}

/// Linear-algebra form of an affine polynomial in `names`; `None` if nonlinear.
fn affine_row(p: &Poly, names: &[String]) -> Option<(Vec<Scalar>, Scalar)> {
    if p.total_degree().unwrap_or(0) > 1 {
        return None;
    }
    let row = names.iter().map(|n| p.coeff_of(&[(n.as_str(), 1)])).collect();
    Some((row, -p.constant_term()))
}

/// Finds real phases making every coefficient real.
///
/// Coefficients whose imaginary part is affine in the phases are imposed,
/// the solved phases substituted, and the process repeated; lower-order
/// coefficients become affine once higher ones are imposed.
pub fn solve_phases(substituted: &Poly, g: usize) -> Result<PhaseSolution> {
    let names = phase_names(g);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut current = substituted.clone();
    loop {
        let ims = imaginary_parts(&current);
        if ims.is_empty() {
            break;
        }
        let mut progress = false;
        for (_, im) in &ims {
            if let Some((r, b)) = affine_row(im, &names) {
                rows.push(r);
                rhs.push(b);
                progress = true;
            }
        }
        if !progress {
            let where_ = ims.iter().map(|(k, _)| format!("{k:?}")).collect::<Vec<_>>().join(", ");
            return Err(Error::NoRealSolution(format!("imaginary parts are not affine in the phases at {where_}")));
        }
        let (pivot_rows, pivots) = match solve_affine(&rows, &rhs, g) {
            AffineSolution::Solved { .. } => rref(
                &rows.iter().zip(&rhs).map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect()).collect(),
                g + 1,
            ),
            AffineSolution::Inconsistent { equation } => {
                let (k, _) = &ims[equation.min(ims.len() - 1)];
                return Err(Error::NoRealSolution(format!("inconsistent reality conditions near monomial {k:?}")));
            }
        };
        // φ_pivot = rhs − Σ_free c φ_free
        let ctx = current.vars().clone();
        let mut bindings: Vec<(&str, Poly)> = Vec::new();
        for (row, &pc) in pivot_rows.iter().zip(&pivots) {
            let mut e = Poly::constant(ctx.clone(), row[g].clone());
            for c in 0..g {
                if c != pc && !row[c].is_zero() {
                    e = e.sub(&Poly::var(ctx.clone(), &names[c]).unwrap().scale(&row[c]));
                }
            }
            bindings.push((names[pc].as_str(), e));
        }
        let next = current.substitute(&bindings).with_vars(&ctx)?;
        if next == current {
            return Err(Error::NoRealSolution("reality conditions do not converge".into()));
        }
        current = next;
    }
    let (reduced, pivots) = if rows.is_empty() {
        (vec![], vec![])
    } else {
        rref(&rows.iter().zip(&rhs).map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect()).collect(), g + 1)
    };
    let constraints = reduced
        .iter()
        .take(pivots.len())
        .map(|r| PhaseConstraint { coeffs: r[..g].to_vec(), rhs: r[g].clone() })
        .collect();
    let (phases, free) = match solve_affine(&rows, &rhs, g) {
        AffineSolution::Solved { particular, free } => (particular, free),
        AffineSolution::Inconsistent { .. } => unreachable!("checked while solving"),
    };
    Ok(PhaseSolution { constraints, phases, free })
}

/// The substituted theta at real phases, normalized to grevlex-leading
/// coefficient 1.
pub fn real_tau(theta: &ThetaPolynomial, rows: &FrameRows, phases: &[Scalar]) -> Result<Poly> {
    let sub = tau_substitute(theta, rows, &constant_phases(phases)).with_vars(&space_ctx())?;
    if sub.is_zero() {
        return Err(Error::ZeroTau);
    }
    for (m, c) in sub.terms() {
        if !c.is_real() {
            return Err(Error::ImaginaryResidue { monomial: sub.monomial_string(m), value: c.to_string() });
        }
    }
    let d = sub.degree_in_vars(&["x", "y"]).unwrap_or(0);
    if d % 2 == 1 {
        return Err(Error::OddDegree(d));
    }
    Ok(sub.monic())
}

/// Everything derived from one theta polynomial.
#[derive(Clone, Debug)]
pub struct TauResult {
    pub tau: Poly,
    pub phases: PhaseSolution,
    pub u: RationalFunction,
    pub certificate: Option<SosCertificate>,
}

/// Substitution, phase solving and the real tau with its solution `u`.
pub fn tau_from_theta(theta: &ThetaPolynomial, rows: &FrameRows, phase_override: Option<&[Scalar]>) -> Result<TauResult> {
    let g = rows.rows.len();
    let symbolic = tau_substitute(theta, rows, &symbolic_phases(g));
    let mut phases = solve_phases(&symbolic, g)?;
    if let Some(p) = phase_override {
        phases.phases = p.to_vec();
    }
    let tau = real_tau(theta, rows, &phases.phases)?;
    let u = u_from_tau(&tau)?;
    Ok(TauResult { tau, phases, u, certificate: None })
}
