//! Sparse multivariate polynomials over Q(i).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-reverse-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                // smaller exponent in the last differing variable wins
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn vars_of(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Union of two variable lists: `a` in order, then the new names of `b`.
pub(crate) fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
    if Arc::ptr_eq(a, b) || a[..] == b[..] {
        return a.clone();
    }
    if b.iter().all(|v| a.contains(v)) {
        return a.clone();
    }
    let mut out: Vec<String> = a.to_vec();
    for v in b.iter() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out.into()
}

/// A polynomial in a named, ordered variable context.
#[derive(Clone)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn zero_in(names: &[&str]) -> Self {
        Poly::zero(vars_of(names))
    }

    pub fn constant(vars: Arc<[String]>, c: Scalar) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            let n = p.vars.len();
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    /// A constant with an empty variable context.
    pub fn scalar(c: Scalar) -> Self {
        Poly::constant(Arc::from(Vec::<String>::new()), c)
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Poly::constant(vars, Scalar::one())
    }

    /// The variable `name` in the context `vars` (which must contain it).
    pub fn var(vars: Arc<[String]>, name: &str) -> Result<Self> {
        let idx = vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        let mut m = Monomial::one(vars.len());
        m.0[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::one());
        Ok(Poly { vars, terms })
    }

    /// The single variable `name` in its own one-variable context.
    pub fn variable(name: &str) -> Self {
        Poly::var(vars_of(&[name]), name).unwrap()
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let n = vars.len();
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length does not match variable count");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    /// Terms in descending grevlex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    /// Terms in ascending grevlex order.
    pub fn terms_ascending(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coeff_of(&self, mono: &[(&str, u32)]) -> Scalar {
        let mut e = vec![0; self.nvars()];
        for (v, k) in mono {
            match self.var_index(v) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return Scalar::zero(),
            }
        }
        self.coeff(&e)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Total degree counted only in the given variables.
    pub fn degree_in_vars(&self, vars: &[&str]) -> Option<u32> {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.var_index(v)).collect();
        self.terms.keys().map(|m| idx.iter().map(|&i| m.0[i]).sum()).max()
    }

    /// Names of the variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn contains_var(&self, var: &str) -> bool {
        self.degree_in(var) > 0
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Re-expresses the polynomial in the context `vars`.
    pub fn with_vars(&self, vars: &Arc<[String]>) -> Result<Poly> {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Ok(Poly { vars: vars.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        for (i, target) in map.iter().enumerate() {
            if target.is_none() && self.terms.keys().any(|m| m.0[i] > 0) {
                return Err(Error::UnknownVariable(self.vars[i].clone()));
            }
        }
        let n = vars.len();
        let mut out = Poly::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, t) in map.iter().enumerate() {
                if let Some(t) = t {
                    e[*t] = m.0[i];
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Drops variables that do not occur.
    pub fn trimmed(&self) -> Poly {
        let used = self.used_vars();
        if used.len() == self.nvars() {
            return self.clone();
        }
        let vars: Arc<[String]> = used.into();
        self.with_vars(&vars).expect("trimming keeps all used variables")
    }

    fn aligned(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let vars = union_vars(&a.vars, &b.vars);
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    }

    fn same_ctx(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..]
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if !self.same_ctx(other) {
            let (a, b) = Poly::aligned(self, other);
            return a.add(&b);
        }
        let (mut big, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c);
        }
        big
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if !self.same_ctx(other) {
            let (a, b) = Poly::aligned(self, other);
            return a.mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|v| *v += &prod).or_insert(prod);
            }
        }
        Poly { vars: self.vars.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn conj(&self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    /// Real and imaginary parts as real polynomials.
    pub fn re_im(&self) -> (Poly, Poly) {
        let mut re = Poly::zero(self.vars.clone());
        let mut im = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            re.add_term(m.clone(), &Scalar::real(c.re().clone()));
            im.add_term(m.clone(), &Scalar::real(c.im().clone()));
        }
        (re, im)
    }

    pub fn derivative(&self, var: &str) -> Poly {
        let Some(i) = self.var_index(var) else {
            return Poly::zero(self.vars.clone());
        };
        let mut out = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, &(c * &Scalar::from_int(e as i64)));
        }
        out
    }

    /// Composition: every bound variable is replaced by its polynomial.
    ///
    /// The result lives in the context made of the unbound variables followed
    /// by the variables of the bindings.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Poly {
        let bound: Vec<Option<usize>> =
            self.vars.iter().map(|v| bindings.iter().position(|(name, _)| name == v)).collect();
        let mut ctx: Arc<[String]> =
            self.vars.iter().zip(&bound).filter(|(_, b)| b.is_none()).map(|(v, _)| v.clone()).collect::<Vec<_>>().into();
        for (_, p) in bindings {
            ctx = union_vars(&ctx, p.vars());
        }
        let images: Vec<Poly> = self
            .vars
            .iter()
            .zip(&bound)
            .map(|(v, b)| match b {
                Some(k) => bindings[*k].1.with_vars(&ctx).unwrap(),
                None => Poly::var(ctx.clone(), v).unwrap(),
            })
            .collect();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(ctx.clone()), p.clone()]).collect();
        let mut out = Poly::zero(ctx.clone());
        for (m, c) in &self.terms {
            let mut t = Poly::constant(ctx.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Substitutes a scalar value for one variable (the variable stays in the context).
    pub fn eval_var(&self, var: &str, value: &Scalar) -> Poly {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        let mut pows = vec![Scalar::one()];
        let mut out = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while pows.len() <= e {
                let next = pows.last().unwrap() * value;
                pows.push(next);
            }
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out.add_term(m2, &(c * &pows[e]));
        }
        out
    }

    /// Full evaluation; `point` is indexed like the variable context.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars());
        let mut pows: Vec<Vec<Scalar>> = point.iter().map(|p| vec![Scalar::one(), p.clone()]).collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = pows[i].last().unwrap() * &point[i];
                    pows[i].push(next);
                }
                t = &t * &pows[i][e as usize];
            }
            acc += &t;
        }
        acc
    }

    /// Evaluation at named values; variables not listed must not occur.
    pub fn eval_named(&self, values: &[(&str, Scalar)]) -> Result<Scalar> {
        let mut point = vec![Scalar::zero(); self.nvars()];
        for (i, v) in self.vars.iter().enumerate() {
            match values.iter().find(|(n, _)| n == v) {
                Some((_, x)) => point[i] = x.clone(),
                None if self.contains_var(v) => return Err(Error::UnknownVariable(v.clone())),
                None => {}
            }
        }
        Ok(self.eval(&point))
    }

    /// Coefficients with respect to `var`, lowest degree first, each in the same context.
    pub fn coeffs_in(&self, var: &str) -> Vec<Poly> {
        let Some(i) = self.var_index(var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out[e].terms.insert(m2, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(vars: &Arc<[String]>, var: &str, coeffs: &[Poly]) -> Poly {
        let i = vars.iter().position(|v| v == var).expect("variable in context");
        let mut out = Poly::zero(vars.clone());
        for (k, c) in coeffs.iter().enumerate() {
            let c = c.with_vars(vars).unwrap();
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.0[i] += k as u32;
                out.add_term(m2, v);
            }
        }
        out
    }

    /// Splits into coefficients of monomials in `main` (exponents ordered like
    /// `main`), each coefficient a polynomial in the remaining variables.
    pub fn collect(&self, main: &[&str]) -> BTreeMap<Vec<u32>, Poly> {
        let idx: Vec<Option<usize>> = main.iter().map(|v| self.var_index(v)).collect();
        let rest_idx: Vec<usize> = (0..self.nvars()).filter(|i| !idx.contains(&Some(*i))).collect();
        let rest: Arc<[String]> = rest_idx.iter().map(|&i| self.vars[i].clone()).collect::<Vec<_>>().into();
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idx.iter().map(|i| i.map_or(0, |i| m.0[i])).collect();
            let rm = Monomial(rest_idx.iter().map(|&i| m.0[i]).collect());
            out.entry(key).or_insert_with(|| Poly::zero(rest.clone())).add_term(rm, c);
        }
        out
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if !self.same_ctx(divisor) {
            let (a, b) = Poly::aligned(self, divisor);
            return a.div_exact(&b);
        }
        let (lm_b, lc_b) = divisor.leading()?;
        let lc_inv = lc_b.inv()?;
        let mut r = self.clone();
        let mut q = Poly::zero(self.vars.clone());
        while let Some((lm_r, lc_r)) = r.leading() {
            if !lm_b.divides(lm_r) {
                return None;
            }
            let m = Monomial(lm_r.0.iter().zip(&lm_b.0).map(|(a, b)| a - b).collect());
            let c = lc_r * &lc_inv;
            r = r.sub(&divisor.mul_monomial(&m, &c));
            q.add_term(m, &c);
        }
        Some(q)
    }

    /// Scales to leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Scales by a rational so that all coefficient parts are coprime integers
    /// and the leading coefficient is positive (first nonzero part).
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(&c.denom_lcm());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let s = c.scale_int(&den);
            g = g.gcd(s.re().numer());
            g = g.gcd(s.im().numer());
        }
        let lc = self.leading_coeff();
        let negative = if lc.re().is_zero() { lc.im().is_negative() } else { lc.re().is_negative() };
        if negative {
            g = -g;
        }
        let k = Scalar::real(num_rational::BigRational::new(den, g));
        self.scale(&k)
    }

    pub fn is_homogeneous_weighted(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.keys().map(|m| m.0.iter().zip(weights).map(|(e, w)| e * w).sum::<u32>());
        match it.next() {
            Some(first) => it.all(|d| d == first),
            None => true,
        }
    }

    /// Human readable monomial, e.g. `Z1^3*Z3`.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        monomial_to_string(&self.vars, m)
    }
}

pub(crate) fn monomial_to_string(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        if self.same_ctx(other) {
            return self.terms == other.terms;
        }
        let (a, b) = Poly::aligned(self, other);
        a.terms == b.terms
    }
}

impl Eq for Poly {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mono = self.monomial_string(m);
            let is_const = m.degree() == 0;
            let (neg, body) = if c.is_real() {
                let neg = c.re().is_negative();
                let abs = if neg { -c } else { c.clone() };
                (neg, abs.to_string())
            } else {
                (false, format!("({c})"))
            };
            let text = if is_const {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{body}*{mono}")
            };
            match (k, neg) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.vars.join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn p(s: &str, vars: &[&str]) -> Poly {
        parse_poly(s, vars).unwrap()
    }

    #[test]
    fn grevlex_order() {
        // x > y > z with grevlex: x^2 > xy > y^2 > xz > yz > z^2
        let q = p("z^2 + y*z + x*z + y^2 + x*y + x^2", &["x", "y", "z"]);
        assert_eq!(q.to_string(), "x^2 + x*y + y^2 + x*z + y*z + z^2");
    }

    #[test]
    fn difference_of_squares_and_annihilator() {
        let a = p("x+1", &["x"]);
        let b = p("x-1", &["x"]);
        assert_eq!(a.mul(&b), p("x^2-1", &["x"]));
        assert!(a.mul(&Poly::zero_in(&["x"])).is_zero());
    }

    #[test]
    fn merging_contexts() {
        let a = p("x+1", &["x"]);
        let b = p("y", &["y"]);
        let c = a.mul(&b);
        assert_eq!(c.vars().len(), 2);
        assert_eq!(c, p("x*y + y", &["y", "x"]));
    }

    #[test]
    fn substitute_shift() {
        let q = p("x^2", &["x"]);
        let r = q.substitute(&[("x", p("x+1", &["x"]))]);
        assert_eq!(r, p("x^2+2*x+1", &["x"]));
    }

    #[test]
    fn exact_division() {
        let a = p("x^3 - y^3", &["x", "y"]);
        let b = p("x - y", &["x", "y"]);
        assert_eq!(a.div_exact(&b).unwrap(), p("x^2 + x*y + y^2", &["x", "y"]));
        assert!(a.div_exact(&p("x+2", &["x", "y"])).is_none());
    }

    #[test]
    fn primitive_normalization() {
        let q = p("-3/2*x^2 + 6*x - 9/4", &["x"]);
        assert_eq!(q.primitive(), p("2*x^2 - 8*x + 3", &["x"]));
    }

    #[test]
    fn display_complex_coefficients() {
        let q = p("(1+2*i)*x - i", &["x"]);
        assert_eq!(q.to_string(), "(1+2*i)*x + (-i)");
        assert_eq!(p(&q.to_string(), &["x"]), q);
    }
}
