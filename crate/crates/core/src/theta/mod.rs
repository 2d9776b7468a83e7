pub mod checks;
pub mod eliminate;
pub mod param;

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Poly};
use crate::curves::{curve_differential_basis, CurveBasis, CurveSpec};
use crate::error::Result;
use crate::groebner::{Budget, Stats};

pub use checks::{
    check_degree_bound, check_leading_term, check_membership, check_membership_seeded, check_weighted_homogeneity,
    expected_leading, mirror_symmetry_sign, DEFAULT_SEED, DegreeReport, LeadingReport, MembershipMethod, MembershipReport,
};
pub use eliminate::{eliminate, Strategy};
pub use param::{build_parametrization, z_names, ThetaParametrization, PARAM};

/// A generator of the theta divisor, primitive over Z with positive leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaPolynomial {
    pub poly: Poly,
    pub leading: Monomial,
    pub degree: u32,
}

impl ThetaPolynomial {
    pub fn new(poly: Poly) -> Self {
        let poly = poly.primitive();
        let leading = poly.leading().map(|(m, _)| m.clone()).unwrap_or(Monomial(vec![0; poly.nvars()]));
        let degree = poly.total_degree().unwrap_or(0);
        ThetaPolynomial { poly, leading, degree }
    }
}

/// Output of the full pipeline from a curve to its theta polynomial.
#[derive(Clone, Debug)]
pub struct ThetaResult {
    pub theta: ThetaPolynomial,
    pub param: ThetaParametrization,
    pub stats: Stats,
}

/// Basis, integrals and elimination for a curve, optionally with a
/// user-supplied basis.
pub fn theta_for_curve(
    c: &CurveSpec,
    basis: Option<CurveBasis>,
    strategy: Strategy,
    budget: &Budget,
) -> Result<ThetaResult> {
    let basis = match basis {
        Some(b) => b,
        None => curve_differential_basis(c)?,
    };
    let param = build_parametrization(&basis, &c.basepoint.at)?;
    let (theta, stats) = eliminate(&param, strategy, budget)?;
    Ok(ThetaResult { theta, param, stats })
}
