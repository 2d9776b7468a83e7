use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::checks::check_membership;
use super::param::{ThetaParametrization, PARAM};
use super::ThetaPolynomial;
use crate::algebra::gcd::{gcd, resultant, squarefree_part};
use crate::algebra::{Poly, Scalar};
use crate::error::{Error, Result};
use crate::groebner::{eliminate as gb_eliminate, Budget, Stats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Block-order Buchberger on the parameters and inverted denominators.
    Lex,
    /// Buchberger on elementary symmetric functions of the parameters.
    Sym,
    /// Iterated resultants (at most two parameters).
    Res,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" | "a" => Ok(Strategy::Lex),
            "sym" | "b" => Ok(Strategy::Sym),
            "res" | "c" => Ok(Strategy::Res),
            other => Err(Error::StrategyUnsupported(format!("unknown strategy '{other}'"))),
        }
    }
}

fn ctx(names: &[String]) -> Arc<[String]> {
    names.to_vec().into()
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Power sums `p_0..=p_max` from elementary symmetric `E_1..E_n` (Newton).
fn power_sums(e: &[Poly], n: usize, max: usize, vars: &Arc<[String]>) -> Vec<Poly> {
    let mut p = vec![Poly::constant(vars.clone(), Scalar::from_int(n as i64))];
    for m in 1..=max {
        let mut acc = Poly::zero(vars.clone());
        for i in 1..m {
            if i > n {
                break;
            }
            let term = e[i - 1].mul(&p[m - i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        if m <= n {
            let term = e[m - 1].scale(&Scalar::from_int(m as i64));
            acc = if m % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        p.push(acc);
    }
    p
}

fn max_orders(p: &ThetaParametrization) -> (usize, Vec<usize>) {
    let poles = p.poles();
    let poly_deg = p.pieces.iter().map(|pf| pf.polynomial.degree().unwrap_or(0)).max().unwrap_or(0);
    let orders = poles
        .iter()
        .map(|a| p.pieces.iter().flat_map(|pf| pf.terms.iter()).filter(|t| &t.pole == a).map(|t| t.order).max().unwrap_or(0))
        .collect();
    (poly_deg, orders)
}

/// Generators for strategy (a).
fn direct_system(p: &ThetaParametrization) -> (Vec<Poly>, Vec<String>, Vec<String>) {
    let n = p.params.len();
    let poles = p.poles();
    let mut elim: Vec<String> = p.params.clone();
    let aux = |k: usize, a: usize| format!("w{}_{}", k + 1, a + 1);
    for k in 0..n {
        for a in 0..poles.len() {
            elim.push(aux(k, a));
        }
    }
    let mut all = elim.clone();
    all.extend(p.zvars.iter().cloned());
    let vars = ctx(&all);
    let var = |name: &str| Poly::var(vars.clone(), name).unwrap();
    let mut gens = Vec::new();
    for k in 0..n {
        for (a, pole) in poles.iter().enumerate() {
            let shifted = var(&p.params[k]).sub(&Poly::constant(vars.clone(), pole.clone()));
            gens.push(var(&aux(k, a)).mul(&shifted).sub(&Poly::one(vars.clone())));
        }
    }
    for (j, pf) in p.pieces.iter().enumerate() {
        let mut rhs = Poly::zero(vars.clone());
        for k in 0..n {
            let t = var(&p.params[k]);
            let mut pw = Poly::one(vars.clone());
            for c in pf.polynomial.coeffs() {
                rhs = rhs.add(&pw.scale(c));
                pw = pw.mul(&t);
            }
            for term in &pf.terms {
                let a = poles.iter().position(|q| q == &term.pole).unwrap();
                rhs = rhs.add(&var(&aux(k, a)).pow(term.order as u32).scale(&term.coeff));
            }
        }
        gens.push(var(&p.zvars[j]).sub(&rhs));
    }
    (gens, elim, p.zvars.clone())
}

/// Generators for strategy (b).
fn symmetric_system(p: &ThetaParametrization) -> (Vec<Poly>, Vec<String>, Vec<String>) {
    let n = p.params.len();
    let poles = p.poles();
    let (poly_deg, orders) = max_orders(p);
    let mut elim: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    for a in 0..poles.len() {
        elim.push(format!("s{}", a + 1));
    }
    let mut all = elim.clone();
    all.extend(p.zvars.iter().cloned());
    let vars = ctx(&all);
    let var = |name: &str| Poly::var(vars.clone(), name).unwrap();
    let e: Vec<Poly> = (1..=n).map(|i| var(&format!("e{i}"))).collect();
    let e_at = |i: usize| if i == 0 { Poly::one(vars.clone()) } else { e[i - 1].clone() };
    // e_j(t − a) in terms of e_i(t)
    let shifted_e = |j: usize, a: &Scalar| -> Poly {
        let mut acc = Poly::zero(vars.clone());
        for i in 0..=j {
            let c = &Scalar::from_int(binomial(n - i, j - i)) * &(-a).pow((j - i) as u32);
            acc = acc.add(&e_at(i).scale(&c));
        }
        acc
    };
    let mut gens = Vec::new();
    let mut pole_sums: Vec<Vec<Poly>> = Vec::new();
    for (a, pole) in poles.iter().enumerate() {
        let s = var(&format!("s{}", a + 1));
        gens.push(s.mul(&shifted_e(n, pole)).sub(&Poly::one(vars.clone())));
        // E_r(1/(t − a)) = s · e_{n−r}(t − a)
        let big_e: Vec<Poly> = (1..=n).map(|r| s.mul(&shifted_e(n - r, pole))).collect();
        pole_sums.push(power_sums(&big_e, n, orders[a], &vars));
    }
    let t_sums = power_sums(&e, n, poly_deg, &vars);
    for (j, pf) in p.pieces.iter().enumerate() {
        let mut rhs = Poly::zero(vars.clone());
        for (m, c) in pf.polynomial.coeffs().iter().enumerate() {
            rhs = rhs.add(&t_sums[m].scale(c));
        }
        for term in &pf.terms {
            let a = poles.iter().position(|q| q == &term.pole).unwrap();
            rhs = rhs.add(&pole_sums[a][term.order].scale(&term.coeff));
        }
        gens.push(var(&p.zvars[j]).sub(&rhs));
    }
    (gens, elim, p.zvars.clone())
}

fn single_generator(mut gens: Vec<Poly>) -> Result<Poly> {
    match gens.len() {
        0 => Err(Error::NotHypersurface("the elimination ideal is zero".into())),
        1 => Ok(gens.pop().unwrap()),
        k => Err(Error::NotHypersurface(format!("{k} generators in the elimination ideal"))),
    }
}

/// Cleared equation `Z_j · Π_k D_j(t_k) − Σ_k N_j(t_k) Π_{l≠k} D_j(t_l)`.
fn cleared_equation(p: &ThetaParametrization, j: usize, vars: &Arc<[String]>) -> Poly {
    let n = p.params.len();
    let i = &p.integrals[j];
    let at = |f: &Poly, k: usize| -> Poly {
        f.substitute(&[(PARAM, Poly::var(vars.clone(), &p.params[k]).unwrap())]).with_vars(vars).unwrap()
    };
    let z = Poly::var(vars.clone(), &p.zvars[j]).unwrap();
    let dens: Vec<Poly> = (0..n).map(|k| at(i.den(), k)).collect();
    let nums: Vec<Poly> = (0..n).map(|k| at(i.num(), k)).collect();
    let all_d = dens.iter().fold(Poly::one(vars.clone()), |acc, d| acc.mul(d));
    let mut rhs = Poly::zero(vars.clone());
    for k in 0..n {
        let others = (0..n).filter(|&l| l != k).fold(Poly::one(vars.clone()), |acc, l| acc.mul(&dens[l]));
        rhs = rhs.add(&nums[k].mul(&others));
    }
    z.mul(&all_d).sub(&rhs)
}

/// Strategy (c): resultant routes, gcd across routes, squarefree part, then
/// removal of extraneous factors that keep the membership test passing.
fn resultant_route(p: &ThetaParametrization) -> Result<Poly> {
    let n = p.params.len();
    let g = p.g;
    let mut all = p.params.clone();
    all.extend(p.zvars.iter().cloned());
    let vars = ctx(&all);
    if n == 0 {
        return Ok(Poly::var(vars, &p.zvars[0]).unwrap());
    }
    if n > 2 {
        return Err(Error::StrategyUnsupported(format!("resultants need at most two parameters, got {n}")));
    }
    let eqs: Vec<Poly> = (0..g).map(|j| cleared_equation(p, j, &vars)).collect();
    let mut candidates: Vec<Poly> = Vec::new();
    let mut acc: Option<Poly> = None;
    if n == 1 {
        let r = resultant(&eqs[0], &eqs[1], &p.params[0]);
        for e in &eqs {
            candidates.push(e.coeffs_in(&p.params[0]).pop().unwrap());
        }
        acc = Some(r);
    } else {
        let (t1, t2) = (&p.params[0], &p.params[1]);
        for pivot in 0..g {
            let others: Vec<usize> = (0..g).filter(|&j| j != pivot).collect();
            let ra = resultant(&eqs[pivot], &eqs[others[0]], t2);
            let rb = resultant(&eqs[pivot], &eqs[others[1]], t2);
            for r in [&ra, &rb] {
                candidates.push(r.coeffs_in(t1).pop().unwrap());
            }
            let r = resultant(&ra, &rb, t1);
            if r.is_zero() {
                continue;
            }
            acc = Some(match acc {
                Some(a) => gcd(&a, &r),
                None => r,
            });
        }
        for e in &eqs {
            candidates.push(e.coeffs_in(t2).pop().unwrap());
        }
    }
    let r = acc.ok_or_else(|| Error::NotHypersurface("all resultant routes vanish".into()))?;
    let mut s = squarefree_part(&r);
    for z in &p.zvars {
        candidates.push(Poly::var(vars.clone(), z).unwrap());
    }
    let zctx: Arc<[String]> = p.zvars.clone().into();
    let mut progress = true;
    while progress {
        progress = false;
        for c in &candidates {
            let c = squarefree_part(&c.trimmed());
            if c.is_constant() {
                continue;
            }
            let g = gcd(&s, &c);
            if g.is_constant() {
                continue;
            }
            let reduced = s.div_exact(&g).unwrap();
            if reduced.is_constant() {
                continue;
            }
            if check_membership(&reduced.with_vars(&zctx)?, p).vanishes {
                s = reduced;
                progress = true;
            }
        }
    }
    Ok(s)
}

/// The polynomial analog of the theta function of a parametrization.
pub fn eliminate(p: &ThetaParametrization, strategy: Strategy, budget: &Budget) -> Result<(ThetaPolynomial, Stats)> {
    let zctx: Arc<[String]> = p.zvars.clone().into();
    let (poly, stats) = match strategy {
        Strategy::Lex | Strategy::Sym => {
            let (gens, elim, keep) = if strategy == Strategy::Lex { direct_system(p) } else { symmetric_system(p) };
            let elim_refs: Vec<&str> = elim.iter().map(String::as_str).collect();
            let keep_refs: Vec<&str> = keep.iter().map(String::as_str).collect();
            let (out, stats) = gb_eliminate(&gens, &elim_refs, &keep_refs, budget)?;
            (single_generator(out)?, stats)
        }
        Strategy::Res => (resultant_route(p)?.with_vars(&zctx)?, Stats::default()),
    };
    if poly.is_constant() {
        return Err(Error::NotHypersurface("elimination ideal is the unit ideal".into()));
    }
    Ok((ThetaPolynomial::new(poly.with_vars(&zctx)?), stats))
}
