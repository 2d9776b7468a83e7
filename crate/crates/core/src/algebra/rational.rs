//! Rational functions kept in lowest terms.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::gcd::{gcd, to_upoly};
use super::poly::{union_vars, Poly};
use super::scalar::Scalar;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and `den` grevlex-monic.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let vars = union_vars(num.vars(), den.vars());
        let num = num.with_vars(&vars).unwrap();
        let den = den.with_vars(&vars).unwrap();
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            let vars = num.vars().clone();
            return RationalFunction { num, den: Poly::one(vars) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::scaled(num, den)
    }

    fn scaled(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.inv().unwrap();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// Builds from a pair already known to be coprime.
    pub fn from_coprime(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero());
        let vars = union_vars(num.vars(), den.vars());
        Self::scaled(num.with_vars(&vars).unwrap(), den.with_vars(&vars).unwrap())
    }

    pub fn from_poly(p: Poly) -> Self {
        let vars = p.vars().clone();
        RationalFunction { num: p, den: Poly::one(vars) }
    }

    pub fn zero(vars: Arc<[String]>) -> Self {
        RationalFunction { num: Poly::zero(vars.clone()), den: Poly::one(vars) }
    }

    pub fn constant(vars: Arc<[String]>, c: Scalar) -> Self {
        Self::from_poly(Poly::constant(vars, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn used_vars(&self) -> Vec<String> {
        let mut v = self.num.used_vars();
        for w in self.den.used_vars() {
            if !v.contains(&w) {
                v.push(w);
            }
        }
        v
    }

    pub fn with_vars(&self, vars: &Arc<[String]>) -> Result<Self> {
        Ok(RationalFunction { num: self.num.with_vars(vars)?, den: self.den.with_vars(vars)? })
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars().clone());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.aligned_to(self);
        }
        if other.is_zero() {
            return self.aligned_to(other);
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_constant() {
                return Self::from_coprime(num, self.den.clone());
            }
            return Self::reduce_aligned(num, self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let bd = self.den.div_exact(&g).unwrap();
        let dd = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&dd).add(&other.num.mul(&bd));
        let den = self.den.mul(&dd);
        if g.is_constant() {
            return Self::from_coprime(num, den);
        }
        Self::reduce_aligned(num, den)
    }

    fn reduce_aligned(num: Poly, den: Poly) -> Self {
        let vars = union_vars(num.vars(), den.vars());
        Self::reduce(num.with_vars(&vars).unwrap(), den.with_vars(&vars).unwrap())
    }

    fn aligned_to(&self, other: &Self) -> Self {
        let vars = union_vars(self.vars(), other.vars());
        self.with_vars(&vars).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(union_vars(self.vars(), other.vars()));
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = other.den.div_exact(&g1).unwrap();
        let c = other.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        Self::from_coprime(a.mul(&c), b.mul(&d))
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    pub fn derivative(&self, var: &str) -> Self {
        let n1 = self.num.derivative(var);
        let d1 = self.den.derivative(var);
        if d1.is_zero() {
            return Self::from_coprime(n1, self.den.clone());
        }
        let num = n1.mul(&self.den).sub(&self.num.mul(&d1));
        Self::reduce(num, self.den.mul(&self.den))
    }

    pub fn conj(&self) -> Self {
        Self::from_coprime(self.num.conj(), self.den.conj())
    }

    /// Substitutes a scalar for one variable.
    pub fn eval_var(&self, var: &str, value: &Scalar) -> Result<Self> {
        let den = self.den.eval_var(var, value);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(self.num.eval_var(var, value), den))
    }

    /// Full evaluation at a point indexed like the variable context.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let d = self.den.eval(point);
        let inv = d.inv().ok_or(Error::ZeroDenominator)?;
        Ok(&self.num.eval(point) * &inv)
    }

    pub fn eval_named(&self, values: &[(&str, Scalar)]) -> Result<Scalar> {
        let d = self.den.eval_named(values)?;
        let inv = d.inv().ok_or(Error::ZeroDenominator)?;
        Ok(&self.num.eval_named(values)? * &inv)
    }

    /// Composition with `var ↦ r`.
    pub fn substitute(&self, var: &str, r: &RationalFunction) -> Self {
        let ctx = union_vars(self.vars(), r.vars());
        let num = self.num.with_vars(&ctx).unwrap();
        let den = self.den.with_vars(&ctx).unwrap();
        let p = r.num.with_vars(&ctx).unwrap();
        let q = r.den.with_vars(&ctx).unwrap();
        let dn = num.degree_in(var);
        let dd = den.degree_in(var);
        let top = dn.max(dd);
        let homog = |f: &Poly, deg: u32| -> Poly {
            let cs = f.coeffs_in(var);
            let mut acc = Poly::zero(ctx.clone());
            for (k, c) in cs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = acc.add(&c.mul(&p.pow(k as u32)).mul(&q.pow(deg - k as u32)));
            }
            acc
        };
        // N(p/q) / D(p/q) = (q^top N(p/q)) / (q^top D(p/q))
        let n = homog(&num, top);
        let d = homog(&den, top);
        Self::reduce(n, d)
    }

    /// `f(1/var)`
    pub fn invert_var(&self, var: &str) -> Self {
        let ctx = self.vars().clone();
        let x = RationalFunction::from_poly(Poly::var(ctx.clone(), var).unwrap_or_else(|_| Poly::variable(var)));
        self.substitute(var, &x.inv().unwrap())
    }

    /// Limit as `var → ∞`; `None` when it diverges.
    pub fn limit_at_infinity(&self, var: &str) -> Option<Self> {
        let dn = self.num.degree_in(var);
        let dd = self.den.degree_in(var);
        if self.num.is_zero() || dn < dd {
            return Some(Self::zero(self.vars().clone()));
        }
        if dn > dd {
            return None;
        }
        let ln = self.num.coeffs_in(var).pop().unwrap();
        let ld = self.den.coeffs_in(var).pop().unwrap();
        Some(Self::reduce(ln, ld))
    }

    /// Numerator and denominator as dense polynomials in `var`.
    pub fn as_univariate(&self, var: &str) -> Result<(UPoly, UPoly)> {
        match (to_upoly(&self.num, var), to_upoly(&self.den, var)) {
            (Some(n), Some(d)) => Ok((n, d)),
            _ => Err(Error::NotUnivariate { var: var.into(), found: self.used_vars() }),
        }
    }

    pub fn from_univariate(num: &UPoly, den: &UPoly, var: &str) -> Result<Self> {
        let vars: Arc<[String]> = vec![var.to_string()].into();
        let n = super::gcd::from_upoly(num, &vars, var);
        let d = super::gcd::from_upoly(den, &vars, var);
        Self::new(n, d)
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{}]({})", self.vars().join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{parse_poly, parse_rational};

    fn rf(s: &str) -> RationalFunction {
        parse_rational(s, &["u", "e"]).unwrap()
    }

    #[test]
    fn lowest_terms_and_monic_denominator() {
        let f = rf("(2*u^2 - 2)/(4*u - 4)");
        assert_eq!(f.num(), &parse_poly("1/2*u + 1/2", &["u", "e"]).unwrap());
        assert_eq!(f.den(), &parse_poly("1", &["u", "e"]).unwrap());
    }

    #[test]
    fn field_operations() {
        let a = rf("1/(u-1)");
        let b = rf("1/(u+1)");
        assert_eq!(a.sub(&b), rf("2/(u^2-1)"));
        assert_eq!(a.mul(&b).inv().unwrap(), rf("u^2-1"));
    }

    #[test]
    fn quotient_rule() {
        let f = rf("1/(1+u^2)");
        assert_eq!(f.derivative("u"), rf("-2*u/(1+u^2)^2"));
    }

    #[test]
    fn chart_inversion() {
        let f = rf("4/(u-1)^2");
        assert_eq!(f.invert_var("u"), rf("4*u^2/(1-u)^2"));
    }

    #[test]
    fn limits_at_infinity() {
        assert!(rf("-4/(u-1)").limit_at_infinity("u").unwrap().is_zero());
        assert_eq!(rf("(3*u+e)/(u-1)").limit_at_infinity("u").unwrap(), rf("3"));
        assert!(rf("u^2/(u-1)").limit_at_infinity("u").is_none());
    }
}
