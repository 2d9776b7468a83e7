use serde::{Deserialize, Serialize};

use super::{constant_phases, space_ctx, tau_substitute, FrameRows, SPACE_VARS};
use crate::algebra::{parse_poly, Poly, Scalar};
use std::sync::Arc;

use crate::curves::{bicuspidal_override, CurveBasis, Differential, DifferentialJson};
use crate::error::{Error, Result};
use crate::theta::ThetaPolynomial;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedSquare {
    pub weight: Scalar,
    pub poly: Poly,
}

/// A real quadratic written as `Σ w_k ℓ_k²` with `w_k ≥ 0`; the last `ℓ` is
/// the constant 1 and its weight is the positive constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub factor: Poly,
    pub squares: Vec<WeightedSquare>,
    pub constant: Scalar,
}

/// `scale · τ = pair_weight · F·F̄ + residual_coeff · Π G_k`, where `F̄` is the
/// conjugate of `F` and every `G_k` is a sum of squares plus a positive
/// constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SosCertificate {
    pub scale: Scalar,
    pub conjugate_pair: Option<(Poly, Poly)>,
    pub pair_weight: Scalar,
    pub summands: Vec<WeightedSquare>,
    pub residual_coeff: Scalar,
    pub residual_factors: Vec<FactorCertificate>,
    pub constant: Scalar,
}

/// Factorization of `θ − F₁F₂/κ` in the Z variables of a reference basis,
/// verified by multiplication. A basis differing from the reference by
/// constant factors per element is handled by rescaling the Z variables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SosTemplate {
    pub residual_coeff: Scalar,
    pub residual_factors: Vec<Poly>,
    #[serde(default)]
    pub reference_basis: Vec<DifferentialJson>,
}

impl SosTemplate {
    /// The residual of the bicuspidal `⟨2,5⟩²` theta.
    pub fn bicuspidal() -> Self {
        let z = ["Z1", "Z2", "Z3", "Z4"];
        SosTemplate {
            residual_coeff: Scalar::from_int(36),
            residual_factors: vec![
                parse_poly("Z1*Z3 + 10*Z1 - 6*Z3 - 56", &z).unwrap(),
                parse_poly("Z1*Z3 + 6*Z1 - 10*Z3 - 56", &z).unwrap(),
            ],
            reference_basis: bicuspidal_override().iter().map(Differential::to_json).collect(),
        }
    }

    /// The template in the variables of `basis`: `Z_ref,j = Z_j / d_j` where
    /// `ω_j = d_j ω_ref,j`. Unchanged if the bases are not proportional.
    fn adapted(&self, basis: &CurveBasis, zvars: &Arc<[String]>) -> Result<Vec<Poly>> {
        let refs: Vec<Differential> =
            self.reference_basis.iter().map(Differential::try_from).collect::<Result<_>>()?;
        let mut scales = Vec::new();
        if refs.len() == basis.len() {
            for (e, r) in basis.elements.iter().zip(&refs) {
                let q = e.diff.to_chart(r.chart).g.div(&r.g)?;
                if !q.is_polynomial() || !q.num().is_constant() || q.is_zero() {
                    scales.clear();
                    break;
                }
                scales.push(q.num().constant_term());
            }
        }
        let factors: Vec<Poly> = self.residual_factors.iter().map(|f| f.with_vars(zvars)).collect::<Result<_>>()?;
        if scales.is_empty() {
            return Ok(factors);
        }
        let bindings: Vec<(&str, Poly)> = zvars
            .iter()
            .zip(&scales)
            .map(|(z, d)| (z.as_str(), Poly::var(zvars.clone(), z).unwrap().scale(&d.inv().unwrap())))
            .collect();
        factors.iter().map(|f| f.substitute(&bindings).with_vars(zvars)).collect()
    }

    pub fn product(&self) -> Poly {
        self.residual_factors.iter().fold(Poly::scalar(self.residual_coeff.clone()), |acc, f| acc.mul(f))
    }
}

fn sum_squares(sq: &[WeightedSquare]) -> Poly {
    sq.iter().fold(Poly::zero(space_ctx()), |acc, s| acc.add(&s.poly.mul(&s.poly).scale(&s.weight)))
}

impl SosCertificate {
    pub fn recombine(&self) -> Poly {
        let mut out = sum_squares(&self.summands).scale(&self.pair_weight);
        let prod = self
            .residual_factors
            .iter()
            .fold(Poly::scalar(self.residual_coeff.clone()), |acc, f| acc.mul(&sum_squares(&f.squares)));
        out = out.add(&prod);
        out.scale(&self.scale.inv().unwrap()).with_vars(&space_ctx()).unwrap()
    }

    /// Re-checks every claim of the certificate against `tau`.
    pub fn verify(&self, tau: &Poly) -> Result<()> {
        let tau = tau.with_vars(&space_ctx())?;
        let nonneg = |s: &Scalar| s.is_real() && s.real_sign() != Some(std::cmp::Ordering::Less);
        if !self.constant.is_positive_real() || tau.constant_term() != self.constant {
            return Err(Error::NonpositiveConstant(self.constant.to_string()));
        }
        if !self.scale.is_positive_real() || !nonneg(&self.pair_weight) || !self.residual_coeff.is_positive_real() {
            return Err(Error::Uncertified("weights must be positive".into()));
        }
        if let Some((f, g)) = &self.conjugate_pair {
            if &f.conj() != g {
                return Err(Error::NotConjugate("stored pair is not conjugate".into()));
            }
            let (a, b) = f.re_im();
            if f.mul(g) != sum_squares(&[sq(a), sq(b)]) {
                return Err(Error::NotConjugate("summands do not match the pair".into()));
            }
        }
        for s in self.summands.iter().chain(self.residual_factors.iter().flat_map(|f| f.squares.iter())) {
            if !nonneg(&s.weight) || !s.poly.is_real() {
                return Err(Error::Uncertified(format!("square of {} has a bad weight", s.poly)));
            }
        }
        for f in &self.residual_factors {
            if sum_squares(&f.squares) != f.factor || !f.constant.is_positive_real() {
                return Err(Error::Uncertified(format!("factor {} is not certified", f.factor)));
            }
            let last = f.squares.last().ok_or_else(|| Error::Uncertified("empty factor".into()))?;
            if !last.poly.is_one() || last.weight != f.constant {
                return Err(Error::Uncertified(format!("factor {} lacks its constant", f.factor)));
            }
        }
        if self.recombine() != tau {
            return Err(Error::RecombinationMismatch("certificate does not reproduce tau".into()));
        }
        Ok(())
    }
}

fn sq(p: Poly) -> WeightedSquare {
    WeightedSquare { weight: Scalar::one(), poly: p }
}

/// LDLᵀ of the Gram matrix of a real quadratic over `[x, y, t, 1]`.
pub fn gram_certificate(q: &Poly) -> Result<FactorCertificate> {
    let q = q.with_vars(&space_ctx())?;
    if !q.is_real() || q.total_degree().unwrap_or(0) > 2 {
        return Err(Error::Uncertified(format!("{q} is not a real quadratic")));
    }
    let n = SPACE_VARS.len() + 1;
    let mono = |i: usize, j: usize| -> Vec<u32> {
        let mut e = vec![0u32; 3];
        if i < 3 {
            e[i] += 1;
        }
        if j < 3 {
            e[j] += 1;
        }
        e
    };
    let half = Scalar::ratio(1, 2);
    let mut m: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q.coeff(&mono(i, j)) } else { &q.coeff(&mono(i, j)) * &half }).collect())
        .collect();
    let basis: Vec<Poly> = SPACE_VARS
        .iter()
        .map(|v| Poly::var(space_ctx(), v).unwrap())
        .chain([Poly::one(space_ctx())])
        .collect();
    let mut squares = Vec::with_capacity(n);
    for k in 0..n {
        let d = m[k][k].clone();
        match d.real_sign() {
            Some(std::cmp::Ordering::Less) => return Err(Error::Uncertified(format!("{q} is not a sum of squares"))),
            Some(std::cmp::Ordering::Equal) => {
                if (k + 1..n).any(|j| !m[k][j].is_zero()) {
                    return Err(Error::Uncertified(format!("{q} is indefinite")));
                }
                squares.push(WeightedSquare { weight: Scalar::zero(), poly: basis[k].clone() });
            }
            _ => {
                let inv = d.inv().unwrap();
                let mut l = basis[k].clone();
                for j in k + 1..n {
                    l = l.add(&basis[j].scale(&(&m[k][j] * &inv)));
                }
                for i in k + 1..n {
                    for j in k + 1..n {
                        let delta = &(&m[k][i] * &m[k][j]) * &inv;
                        m[i][j] = &m[i][j] - &delta;
                    }
                }
                squares.push(WeightedSquare { weight: d, poly: l });
            }
        }
    }
    let constant = squares.last().unwrap().weight.clone();
    if !constant.is_positive_real() {
        return Err(Error::Uncertified(format!("{q} has no positive constant part")));
    }
    Ok(FactorCertificate { factor: q, squares, constant })
}

/// Coefficient of `var^deg(var)` in `p`, kept in `p`'s context.
fn top_coefficient(p: &Poly, var: &str) -> Poly {
    p.coeffs_in(var).pop().unwrap_or_else(|| Poly::zero(p.vars().clone()))
}

/// Regularity certificate for a tau function.
///
/// Quadratic taus are handled by a Gram decomposition. Otherwise the theta
/// must split into two singularity blocks, `θ = F₁F₂/κ + R`, with `F₁`, `F₂`
/// conjugate after substitution and `R` factored by the template (the
/// bicuspidal one by default).
pub fn sos_certify(
    tau: &Poly,
    theta: &ThetaPolynomial,
    basis: &CurveBasis,
    rows: &FrameRows,
    phases: &[Scalar],
    template: Option<&SosTemplate>,
) -> Result<SosCertificate> {
    let tau = tau.with_vars(&space_ctx())?;
    let constant = tau.constant_term();
    if !constant.is_positive_real() {
        return Err(Error::NonpositiveConstant(constant.to_string()));
    }
    if tau.total_degree().unwrap_or(0) <= 2 {
        let f = gram_certificate(&tau)?;
        let cert = SosCertificate {
            scale: Scalar::one(),
            conjugate_pair: None,
            pair_weight: Scalar::zero(),
            summands: vec![],
            residual_coeff: Scalar::one(),
            residual_factors: vec![f],
            constant,
        };
        cert.verify(&tau)?;
        return Ok(cert);
    }
    let leads = basis.block_leads();
    if leads.len() != 2 {
        return Err(Error::Uncertified(format!("no built-in template for {} singular blocks", leads.len())));
    }
    let zvars = theta.poly.vars().clone();
    let block_of = |idx: usize| basis.elements[idx].block;
    let (lead1, lead2) = (zvars[leads[0].1].as_str(), zvars[leads[1].1].as_str());
    let f1 = top_coefficient(&theta.poly, lead2);
    let f2 = top_coefficient(&theta.poly, lead1);
    let kappa = top_coefficient(&f1, lead1).constant_term();
    for (f, own) in [(&f1, leads[0].0), (&f2, leads[1].0)] {
        if f.used_vars().iter().any(|v| block_of(zvars.iter().position(|z| z == v).unwrap()) != own) {
            return Err(Error::NotConjugate(format!("block factor {f} mixes blocks")));
        }
    }
    if kappa.is_zero() {
        return Err(Error::NotConjugate("block factors have no common top term".into()));
    }
    let residual = theta.poly.sub(&f1.mul(&f2).scale(&kappa.inv().unwrap()));
    let builtin = SosTemplate::bicuspidal();
    let template = match template {
        Some(t) => t.clone(),
        None if residual.is_constant() => SosTemplate {
            residual_coeff: residual.constant_term(),
            residual_factors: vec![],
            reference_basis: vec![],
        },
        None => builtin,
    };
    let factors = template.adapted(basis, &zvars)?;
    let product = factors.iter().fold(Poly::one(zvars.clone()), |acc, f| acc.mul(f));
    // residual = μ · Π G_k, μ read off the leading terms
    let mu = match (residual.leading(), product.leading()) {
        (Some((m, a)), Some((n, b))) if m == n => a * &b.inv().unwrap(),
        _ => Scalar::zero(),
    };
    if mu.is_zero() || product.scale(&mu) != residual {
        return Err(Error::RecombinationMismatch(format!("residual {residual} does not match the template")));
    }
    if !mu.is_positive_real() {
        return Err(Error::NonpositiveConstant(format!("residual coefficient {mu}")));
    }
    let ph = constant_phases(phases);
    let sub = |p: &Poly| -> Result<Poly> {
        let t = ThetaPolynomial { poly: p.with_vars(&zvars)?, leading: theta.leading.clone(), degree: theta.degree };
        tau_substitute(&t, rows, &ph).with_vars(&space_ctx())
    };
    let (f1s, f2s) = (sub(&f1)?, sub(&f2)?);
    let c = match (f1s.leading(), f2s.leading()) {
        (Some((_, a)), Some((_, b))) => b * &a.conj().inv().unwrap(),
        _ => return Err(Error::NotConjugate("a block factor vanishes".into())),
    };
    if !c.is_real() || f1s.conj().scale(&c) != f2s {
        return Err(Error::NotConjugate(format!("{f1s} and {f2s} are not conjugate")));
    }
    let pair_weight = &c * &kappa.inv().unwrap();
    if !pair_weight.is_positive_real() {
        return Err(Error::NotConjugate(format!("conjugate product has weight {pair_weight}")));
    }
    let (a, b) = f1s.re_im();
    let mut certs = Vec::new();
    for g in &factors {
        certs.push(gram_certificate(&sub(g)?)?);
    }
    let full = sub(&theta.poly)?;
    let cert = SosCertificate {
        scale: full.leading_coeff(),
        conjugate_pair: Some((f1s.clone(), f1s.conj())),
        pair_weight,
        summands: vec![sq(a), sq(b)],
        residual_coeff: mu,
        residual_factors: certs,
        constant,
    };
    cert.verify(&tau)?;
    Ok(cert)
}
