use std::sync::Arc;

use crate::algebra::{integrate_log_free, partial_fractions, PartialFractions, Point, Poly, RationalFunction, Scalar};
use crate::curves::differential::rename_var;
use crate::curves::{Chart, CurveBasis};
use crate::error::Result;

/// Name of the integration variable of the abelian integrals.
pub const PARAM: &str = "t";

/// `Z_j = Σ_k I_j(t_k)` for `k = 1..g−1`.
#[derive(Clone, Debug)]
pub struct ThetaParametrization {
    pub g: usize,
    pub chart: Chart,
    pub basepoint: Point,
    /// `I_j(t)`, each vanishing at the base point.
    pub integrals: Vec<RationalFunction>,
    pub pieces: Vec<PartialFractions>,
    pub params: Vec<String>,
    pub zvars: Vec<String>,
    pub basis: CurveBasis,
}

pub fn z_names(g: usize) -> Vec<String> {
    (1..=g).map(|j| format!("Z{j}")).collect()
}

/// Integrates every basis differential from the base point.
pub fn build_parametrization(basis: &CurveBasis, basepoint: &Point) -> Result<ThetaParametrization> {
    let g = basis.len();
    let chart = basis.chart;
    let mut integrals = Vec::with_capacity(g);
    let mut pieces = Vec::with_capacity(g);
    let tvars: Arc<[String]> = vec![PARAM.to_string()].into();
    for e in &basis.elements {
        let d = e.diff.to_chart(chart);
        let i = integrate_log_free(&d.g, chart.var(), basepoint)?;
        let ctx: Arc<[String]> = vec![chart.var().to_string(), PARAM.to_string()].into();
        let renamed = rename_var(&i.with_vars(&ctx)?, chart.var(), PARAM).with_vars(&tvars)?;
        pieces.push(partial_fractions(&renamed, PARAM)?);
        integrals.push(renamed);
    }
    Ok(ThetaParametrization {
        g,
        chart,
        basepoint: basepoint.clone(),
        integrals,
        pieces,
        params: (1..g).map(|k| format!("t{k}")).collect(),
        zvars: z_names(g),
        basis: basis.clone(),
    })
}

impl ThetaParametrization {
    /// Distinct finite poles of the integrals.
    pub fn poles(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for pf in &self.pieces {
            for (p, _) in pf.poles() {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// `Z_j` evaluated at parameter values.
    pub fn point(&self, ts: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut z = vec![Scalar::from_int(0); self.g];
        for (j, i) in self.integrals.iter().enumerate() {
            for t in ts {
                z[j] += &i.eval(std::slice::from_ref(t))?;
            }
        }
        Ok(z)
    }

    /// Common denominator `L(t)` of all integrals (monic).
    pub fn common_denominator(&self) -> Poly {
        let mut l = Poly::one(self.integrals[0].vars().clone());
        for i in &self.integrals {
            let g = crate::algebra::gcd::gcd(&l, i.den());
            l = l.mul(&i.den().div_exact(&g).unwrap());
        }
        l.monic()
    }
}
