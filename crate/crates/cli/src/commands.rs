use std::time::Duration;

use serde::{Deserialize, Serialize};

use cusplump::algebra::{Poly, Scalar};
use cusplump::curves::{CurveBasis, CurveSpec, DifferentialJson, Semigroup};
use cusplump::degeneration::{family_differentials_at, rescale_and_limit, NodalFamily};
use cusplump::groebner::Budget;
use cusplump::tau::{
    decay_check, frame_rows, kp1_residual, sos_certify, tau_from_theta, u_from_tau, SosTemplate,
};
use cusplump::theta::{
    check_degree_bound, check_leading_term, check_membership_seeded, eliminate, build_parametrization, Strategy,
    ThetaPolynomial,
};

use crate::error::Result;
use crate::files::{CheckLine, DiffsFile, TauFile, ThetaFile};
use crate::grid::{evaluate_grid, FloatField, GridSpec};
use crate::lumps::{detect_lumps, LumpReport};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
    pub delta: usize,
    pub conductor: u32,
    pub gorenstein: bool,
    pub partition: Vec<u32>,
}

pub fn semigroup(gens: &[u32]) -> Result<SemigroupReport> {
    let s = Semigroup::new(gens)?;
    Ok(SemigroupReport {
        generators: s.generators().to_vec(),
        gaps: s.gaps().to_vec(),
        delta: s.delta(),
        conductor: s.conductor(),
        gorenstein: s.is_gorenstein(),
        partition: s.weierstrass_partition().parts,
    })
}

pub fn differentials(basis: &CurveBasis) -> DiffsFile {
    DiffsFile { differentials: basis.to_json().differentials }
}

pub fn theta(c: &CurveSpec, basis: CurveBasis, strategy: Strategy, timeout: Duration, seed: u64) -> Result<ThetaFile> {
    let param = build_parametrization(&basis, &c.basepoint.at)?;
    let budget = Budget { max_time: Some(timeout), ..Budget::default() };
    let (t, stats) = eliminate(&param, strategy, &budget)?;
    let membership = check_membership_seeded(&t.poly, &param, seed);
    let checks = vec![
        CheckLine::new("membership", if membership.vanishes { Ok(format!("{:?}", membership.method)) } else { Err("θ(I(t)) ≠ 0".into()) }),
        CheckLine::new("degree", check_degree_bound(&t, c).map(|r| format!("{} ≤ {}", r.degree, r.bound)).map_err(|e| e.to_string())),
        CheckLine::new("leading", check_leading_term(&t, &basis, c).map(|r| r.found).map_err(|e| e.to_string())),
    ];
    Ok(ThetaFile {
        curve: c.clone(),
        basis: basis.to_json(),
        strategy,
        text: t.poly.to_string(),
        degree: t.degree,
        leading: t.poly.monomial_string(&t.leading),
        theta: t.poly,
        membership,
        checks,
        stats,
    })
}

pub fn tau(th: &ThetaFile, c: &CurveSpec, phases: Option<&[Scalar]>, template: Option<&SosTemplate>) -> Result<TauFile> {
    let basis = th.basis()?;
    let rows = frame_rows(&basis, &c.expansion_point, 3)?;
    let theta = ThetaPolynomial::new(th.theta.clone());
    let r = tau_from_theta(&theta, &rows, phases)?;
    let cert = sos_certify(&r.tau, &theta, &basis, &rows, &r.phases.phases, template);
    Ok(TauFile {
        phases: r.phases.phases.clone(),
        constraints: r.phases.constraints.iter().map(|c| c.to_string()).collect(),
        rows,
        text: r.tau.to_string(),
        tau: r.tau,
        u: r.u,
        certificate_error: cert.as_ref().err().map(|e| e.to_string()),
        certificate: cert.ok(),
    })
}

pub const CHECKS: [&str; 4] = ["reality", "sos", "kp1", "decay"];

pub fn verify(t: &TauFile, checks: &[String]) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for name in checks {
        let line = match name.as_str() {
            "reality" => CheckLine::new(
                "reality",
                if t.tau.is_real() { Ok("all coefficients real".into()) } else { Err("imaginary coefficients".into()) },
            ),
            "sos" => CheckLine::new(
                "sos",
                match &t.certificate {
                    Some(c) => c.verify(&t.tau).map(|_| format!("constant {}", c.constant)).map_err(|e| e.to_string()),
                    None => Err(t.certificate_error.clone().unwrap_or_else(|| "no certificate".into())),
                },
            ),
            "kp1" => {
                let u = u_from_tau(&t.tau)?;
                let r = kp1_residual(&u);
                CheckLine::new("kp1", if r.is_zero() { Ok("residual is 0".into()) } else { Err(format!("residual has {} terms", r.len())) })
            }
            "decay" => {
                let u = u_from_tau(&t.tau)?;
                CheckLine::new(
                    "decay",
                    decay_check(&u, &Scalar::from_int(0))
                        .map(|r| format!("degrees {}/{}, ray ratio {:.3}", r.num_degree, r.den_degree, r.ray_ratio))
                        .map_err(|e| e.to_string()),
                )
            }
            other => CheckLine::new(other, Err("unknown check".into())),
        };
        out.push(line);
    }
    Ok(out)
}

pub fn degenerate(family: &str, eps: Option<&Scalar>) -> Result<DiffsFile> {
    let f = match family {
        "g4" => NodalFamily::genus4(),
        "g6" => NodalFamily::genus6()?,
        other => return Err(cusplump::Error::InvalidCurve(format!("unknown family '{other}'")).into()),
    };
    let diffs = match eps {
        Some(e) => family_differentials_at(&f, e)?,
        None => rescale_and_limit(&f)?,
    };
    Ok(DiffsFile { differentials: diffs.iter().map(|d| d.to_json()).collect::<Vec<DifferentialJson>>() })
}

pub fn lumps(t: &TauFile, g: &GridSpec, floor: Option<f64>, allow_unverified: bool) -> Result<Vec<LumpReport>> {
    let slices = evaluate_grid(&FloatField::from_tau(&t.tau), g, t.certificate.is_some(), allow_unverified)?;
    Ok(slices.iter().map(|s| detect_lumps(s, g, floor)).collect())
}

/// Exact `u` at a point, for agreement checks.
pub fn exact_u(tau: &Poly, x: &Scalar, y: &Scalar, t: &Scalar) -> Result<Scalar> {
    Ok(u_from_tau(tau)?.eval_named(&[("x", x.clone()), ("y", y.clone()), ("t", t.clone())])?)
}
