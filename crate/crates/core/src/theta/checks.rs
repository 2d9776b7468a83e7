use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::param::ThetaParametrization;
use super::ThetaPolynomial;
use crate::algebra::{Monomial, Poly, Scalar};
use crate::curves::{CurveBasis, CurveSpec, Singularity};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: u32,
    pub bound: u32,
    pub equality_required: bool,
}

/// Total degree is at most `g(g+1)/2`, with equality for one `⟨2,2g+1⟩` cusp.
pub fn check_degree_bound(t: &ThetaPolynomial, c: &CurveSpec) -> Result<DegreeReport> {
    let g = c.genus() as u32;
    let bound = g * (g + 1) / 2;
    let equality_required = c.is_single_a_even_cusp();
    if t.degree > bound {
        return Err(Error::BoundViolated(format!("degree {} exceeds {bound}", t.degree)));
    }
    if equality_required && t.degree != bound {
        return Err(Error::BoundViolated(format!("degree {} should equal {bound}", t.degree)));
    }
    Ok(DegreeReport { degree: t.degree, bound, equality_required })
}

/// `Π_i (Z_lead(i))^{|λ(P_i)|}` over the cusps, in the basis' variable order.
pub fn expected_leading(basis: &CurveBasis, c: &CurveSpec) -> Monomial {
    let mut e = vec![0u32; basis.len()];
    for (block, idx) in basis.block_leads() {
        e[idx] = match &c.singularities[block] {
            Singularity::Cusp { semigroup, .. } => semigroup.weierstrass_partition().size(),
            Singularity::Node { .. } => 1,
        };
    }
    Monomial(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingReport {
    pub expected: String,
    pub found: String,
}

/// The unique monomial of top total degree matches the partition formula.
pub fn check_leading_term(t: &ThetaPolynomial, basis: &CurveBasis, c: &CurveSpec) -> Result<LeadingReport> {
    let want = expected_leading(basis, c);
    let expected = t.poly.monomial_string(&want);
    let top: Vec<&Monomial> = t.poly.terms().filter(|(m, _)| m.degree() == t.degree).map(|(m, _)| m).collect();
    let found = top.iter().map(|m| t.poly.monomial_string(m)).collect::<Vec<_>>().join(" + ");
    if top.len() != 1 || top[0] != &want {
        return Err(Error::LeadingTermMismatch { expected, found });
    }
    Ok(LeadingReport { expected, found })
}

pub fn check_weighted_homogeneity(t: &Poly, weights: &[u32]) -> bool {
    t.is_homogeneous_weighted(weights)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MembershipMethod {
    /// Vanishing on a product grid larger than the per-variable degree bound:
    /// a proof of identical vanishing.
    InterpolationGrid { per_axis: u64 },
    /// Vanishing at random points; failure probability at most `error_bound`.
    RandomSample { seed: u64, error_bound: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub vanishes: bool,
    pub points: u64,
    pub degree_bound: u32,
    pub method: MembershipMethod,
}

pub const MEMBERSHIP_GRID_LIMIT: u64 = 120_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Per-parameter degree bound of the cleared numerator of `θ(Σ_k I(t_k))`.
fn degree_bound(t: &Poly, p: &ThetaParametrization) -> u32 {
    let l = p.common_denominator();
    let dl = l.total_degree().unwrap_or(0);
    let m = p
        .integrals
        .iter()
        .map(|i| {
            let cleared = i.num().mul(&l.div_exact(i.den()).unwrap());
            cleared.total_degree().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
        .max(dl);
    t.total_degree().unwrap_or(0) * m
}

/// Integer sample values avoiding the poles of the integrals.
fn sample_values(p: &ThetaParametrization, count: usize) -> Vec<Scalar> {
    let poles = p.poles();
    let mut out = Vec::with_capacity(count);
    let mut k = 2i64;
    while out.len() < count {
        let v = Scalar::from_int(k);
        if !poles.contains(&v) {
            out.push(v);
        }
        k = if k > 0 { -k } else { -k + 1 };
    }
    out
}

/// Checks `θ(Σ_k I_j(t_k)) ≡ 0`.
pub fn check_membership(t: &Poly, p: &ThetaParametrization) -> MembershipReport {
    check_membership_seeded(t, p, DEFAULT_SEED)
}

pub fn check_membership_seeded(t: &Poly, p: &ThetaParametrization, seed: u64) -> MembershipReport {
    let tz = t.with_vars(&p.zvars.clone().into()).expect("theta lives in the Z variables");
    let n = p.params.len();
    let bound = degree_bound(&tz, p);
    let per_axis = bound as u64 + 1;
    let total = per_axis.checked_pow(n as u32).unwrap_or(u64::MAX);
    if total <= MEMBERSHIP_GRID_LIMIT {
        let values = sample_values(p, per_axis as usize);
        let table: Vec<Vec<Scalar>> = values
            .iter()
            .map(|v| p.integrals.iter().map(|i| i.eval(std::slice::from_ref(v)).unwrap()).collect())
            .collect();
        let mut idx = vec![0usize; n];
        let mut points = 0u64;
        loop {
            let mut z = vec![Scalar::from_int(0); p.g];
            for &k in &idx {
                for (j, zj) in z.iter_mut().enumerate() {
                    *zj += &table[k][j];
                }
            }
            points += 1;
            if !tz.eval(&z).is_zero() {
                return MembershipReport {
                    vanishes: false,
                    points,
                    degree_bound: bound,
                    method: MembershipMethod::InterpolationGrid { per_axis },
                };
            }
            // odometer over the grid, restricted to non-decreasing index tuples
            // (the substituted polynomial is symmetric in the parameters)
            let mut pos = n;
            loop {
                if pos == 0 {
                    return MembershipReport {
                        vanishes: true,
                        points,
                        degree_bound: bound,
                        method: MembershipMethod::InterpolationGrid { per_axis },
                    };
                }
                pos -= 1;
                if idx[pos] + 1 < per_axis as usize {
                    idx[pos] += 1;
                    for q in pos + 1..n {
                        idx[q] = idx[pos];
                    }
                    break;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let poles = p.poles();
    let samples = 64u64;
    let range = 1_000_000i64;
    for s in 0..samples {
        let ts: Vec<Scalar> = (0..n)
            .map(|_| loop {
                let v = Scalar::from_int(rng.gen_range(-range..=range));
                if !poles.contains(&v) {
                    break v;
                }
            })
            .collect();
        let z = p.point(&ts).unwrap();
        if !tz.eval(&z).is_zero() {
            return MembershipReport {
                vanishes: false,
                points: s + 1,
                degree_bound: bound,
                method: MembershipMethod::RandomSample { seed, error_bound: "0".into() },
            };
        }
    }
    let total_degree = bound as u64 * n as u64;
    MembershipReport {
        vanishes: true,
        points: samples,
        degree_bound: bound,
        method: MembershipMethod::RandomSample {
            seed,
            error_bound: format!("({total_degree}/{})^{samples}", 2 * range + 1),
        },
    }
}

/// `θ(−Z3, −Z4, −Z1, −Z2) = ±θ(Z1, Z2, Z3, Z4)`; returns the sign.
pub fn mirror_symmetry_sign(t: &Poly) -> Option<i8> {
    let vars = t.vars().clone();
    let v = |n: &str| Poly::var(vars.clone(), n).unwrap().neg();
    let swapped =
        t.substitute(&[("Z1", v("Z3")), ("Z2", v("Z4")), ("Z3", v("Z1")), ("Z4", v("Z2"))]).with_vars(&vars).ok()?;
    if &swapped == t {
        Some(1)
    } else if swapped == t.neg() {
        Some(-1)
    } else {
        None
    }
}
