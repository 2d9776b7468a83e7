//! Partial fractions over Q(i) and log-free integration.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::RationalFunction;
use super::scalar::Scalar;
use super::series::series_expand;
use super::upoly::UPoly;
use super::Point;
use crate::error::{Error, Result};

/// `coeff / (var − pole)^order`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleTerm {
    pub pole: Scalar,
    pub order: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub var: String,
    pub polynomial: UPoly,
    pub terms: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_univariate(&self.polynomial, &UPoly::constant(Scalar::one()), &self.var).unwrap();
        for t in &self.terms {
            let den = UPoly::linear(&t.pole).pow(t.order as u32);
            let term = RationalFunction::from_univariate(&UPoly::constant(t.coeff.clone()), &den, &self.var).unwrap();
            acc = acc.add(&term);
        }
        acc
    }

    /// Residue at `pole` (coefficient of the simple pole).
    pub fn residue(&self, pole: &Scalar) -> Scalar {
        self.terms.iter().find(|t| &t.pole == pole && t.order == 1).map(|t| t.coeff.clone()).unwrap_or_default()
    }

    /// Distinct poles in order of discovery, with their maximal orders.
    pub fn poles(&self) -> Vec<(Scalar, usize)> {
        let mut out: Vec<(Scalar, usize)> = Vec::new();
        for t in &self.terms {
            match out.iter_mut().find(|(p, _)| p == &t.pole) {
                Some(e) => e.1 = e.1.max(t.order),
                None => out.push((t.pole.clone(), t.order)),
            }
        }
        out
    }
}

/// Decomposes a univariate rational function into polynomial part and pole terms.
pub fn partial_fractions(f: &RationalFunction, var: &str) -> Result<PartialFractions> {
    let (n, d) = f.as_univariate(var)?;
    let (q, r) = n.divrem(&d);
    let (roots, rest) = d.rational_roots();
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        return Err(Error::IrreducibleDenominator { degree: deg });
    }
    let mut terms = Vec::new();
    for (root, mult) in &roots {
        let (cofactor, _) = d.divrem(&UPoly::linear(root).pow(*mult as u32));
        let g = RationalFunction::from_univariate(&r, &cofactor, var)?;
        let s = series_expand(&g, var, root, *mult)?;
        for k in (0..*mult).rev() {
            let c = &s.coeffs[k];
            if !c.is_zero() {
                terms.push(PoleTerm { pole: root.clone(), order: mult - k, coeff: c.clone() });
            }
        }
    }
    Ok(PartialFractions { var: var.into(), polynomial: q, terms })
}

/// Rational antiderivative of `f` in `var`, vanishing at `base`.
pub fn integrate_log_free(f: &RationalFunction, var: &str, base: &Point) -> Result<RationalFunction> {
    let pf = partial_fractions(f, var)?;
    if let Some(t) = pf.terms.iter().find(|t| t.order == 1) {
        return Err(Error::LogTermRequired { pole: t.pole.to_string(), residue: t.coeff.to_string() });
    }
    let poly = UPoly::new(
        std::iter::once(Scalar::zero())
            .chain(pf.polynomial.coeffs().iter().enumerate().map(|(k, c)| c * &Scalar::ratio(1, k as i64 + 1)))
            .collect(),
    );
    let mut g = RationalFunction::from_univariate(&poly, &UPoly::constant(Scalar::one()), var)?;
    for t in &pf.terms {
        let k = t.order as i64 - 1;
        let coeff = &t.coeff * &Scalar::ratio(-1, k);
        let den = UPoly::linear(&t.pole).pow(k as u32);
        g = g.add(&RationalFunction::from_univariate(&UPoly::constant(coeff), &den, var)?);
    }
    match base {
        Point::Infinity => {
            if poly.degree().is_some_and(|d| d > 0) {
                return Err(Error::DivergentAtBasepoint("antiderivative grows at infinity".into()));
            }
            Ok(g)
        }
        Point::Finite(b) => {
            if pf.terms.iter().any(|t| &t.pole == b) {
                return Err(Error::DivergentAtBasepoint(format!("{var} = {b} is a pole")));
            }
            let value = g.eval_named(&[(var, b.clone())])?;
            Ok(g.sub(&RationalFunction::constant(g.vars().clone(), value)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_rational;

    fn rf(s: &str) -> RationalFunction {
        parse_rational(s, &["u"]).unwrap()
    }

    fn term(p: i64, o: usize, c: Scalar) -> PoleTerm {
        PoleTerm { pole: Scalar::from_int(p), order: o, coeff: c }
    }

    #[test]
    fn fourth_order_pole() {
        let f = rf("-12*u^2/(u-1)^4");
        let pf = partial_fractions(&f, "u").unwrap();
        assert!(pf.polynomial.is_zero());
        let mut got = pf.terms.clone();
        got.sort_by_key(|t| t.order);
        assert_eq!(
            got,
            vec![term(1, 2, Scalar::from_int(-12)), term(1, 3, Scalar::from_int(-24)), term(1, 4, Scalar::from_int(-12))]
        );
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn textbook_split() {
        let pf = partial_fractions(&rf("1/(u^2-1)"), "u").unwrap();
        assert_eq!(pf.terms.len(), 2);
        assert!(pf.terms.contains(&term(1, 1, Scalar::ratio(1, 2))));
        assert!(pf.terms.contains(&term(-1, 1, Scalar::ratio(-1, 2))));
    }

    #[test]
    fn node_split() {
        let f = rf("(2-3)/((1-2*u)*(1-3*u))");
        let pf = partial_fractions(&f, "u").unwrap();
        let poles: Vec<Scalar> = pf.poles().into_iter().map(|p| p.0).collect();
        assert!(poles.contains(&Scalar::ratio(1, 2)) && poles.contains(&Scalar::ratio(1, 3)));
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn irreducible() {
        assert!(matches!(
            partial_fractions(&rf("1/(u^2+1)"), "u"),
            Err(Error::IrreducibleDenominator { degree: 2 })
        ));
    }

    #[test]
    fn integrals() {
        let g = integrate_log_free(&rf("4/(u-1)^2"), "u", &Point::Infinity).unwrap();
        assert_eq!(g, rf("-4/(u-1)"));
        let h = integrate_log_free(&rf("-12*u^2/(u-1)^4"), "u", &Point::Infinity).unwrap();
        assert_eq!(h, rf("12/(u-1) + 12/(u-1)^2 + 4/(u-1)^3"));
        assert!(matches!(integrate_log_free(&rf("1/(u-1)"), "u", &Point::Infinity), Err(Error::LogTermRequired { .. })));
    }

    #[test]
    fn polynomial_integral_pinned_at_zero() {
        let g = integrate_log_free(&rf("u^6"), "u", &Point::Finite(Scalar::zero())).unwrap();
        assert_eq!(g, rf("u^7/7"));
        let s = integrate_log_free(&rf("1/(u-1)^2"), "u", &Point::Finite(Scalar::zero())).unwrap();
        assert_eq!(s.derivative("u"), rf("1/(u-1)^2"));
        assert!(s.eval(&[Scalar::zero()]).unwrap().is_zero());
    }
}
