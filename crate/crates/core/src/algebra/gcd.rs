//! Multivariate gcd over Q(i) by recursive subresultant remainder sequences.

use num_traits::Zero;

use super::poly::Poly;
use super::scalar::Scalar;
use super::upoly::UPoly;

/// Converts a polynomial that only involves `var` to dense form.
pub fn to_upoly(p: &Poly, var: &str) -> Option<UPoly> {
    let idx = p.var_index(var);
    let mut coeffs = vec![Scalar::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        for (i, &e) in m.exps().iter().enumerate() {
            if Some(i) != idx && e > 0 {
                return None;
            }
        }
        let k = idx.map_or(0, |i| m.exps()[i] as usize);
        coeffs[k] = c.clone();
    }
    Some(UPoly::new(coeffs))
}

pub fn from_upoly(u: &UPoly, vars: &std::sync::Arc<[String]>, var: &str) -> Poly {
    let x = Poly::var(vars.clone(), var).expect("variable in context");
    let mut acc = Poly::zero(vars.clone());
    for c in u.coeffs().iter().rev() {
        acc = acc.mul(&x).add(&Poly::constant(vars.clone(), c.clone()));
    }
    acc
}

fn common_vars(a: &Poly, b: &Poly) -> Vec<String> {
    let bv = b.used_vars();
    a.used_vars().into_iter().filter(|v| bv.contains(v)).collect()
}

/// Cheap proof that the gcd is a constant: for every shared variable, some
/// integer specialization of the others keeps both leading coefficients and
/// makes the univariate images coprime.
fn provably_coprime(a: &Poly, b: &Poly) -> bool {
    let shared = common_vars(a, b);
    if shared.is_empty() {
        return true;
    }
    'vars: for v in &shared {
        let others: Vec<String> = a.used_vars().into_iter().chain(b.used_vars()).filter(|w| w != v).collect();
        let la = a.coeffs_in(v).pop().unwrap();
        let lb = b.coeffs_in(v).pop().unwrap();
        for attempt in 0..4i64 {
            let mut sa = a.clone();
            let mut sb = b.clone();
            let mut sla = la.clone();
            let mut slb = lb.clone();
            for (k, w) in others.iter().enumerate() {
                let val = Scalar::from_int(2 + 3 * k as i64 + 7 * attempt);
                sa = sa.eval_var(w, &val);
                sb = sb.eval_var(w, &val);
                sla = sla.eval_var(w, &val);
                slb = slb.eval_var(w, &val);
            }
            if sla.is_zero() || slb.is_zero() {
                continue;
            }
            let (ua, ub) = (to_upoly(&sa, v).unwrap(), to_upoly(&sb, v).unwrap());
            if ua.gcd(&ub).degree() == Some(0) {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

/// Normalizes to grevlex-leading coefficient 1.
fn normalize(p: Poly) -> Poly {
    p.monic()
}

/// Gcd with leading coefficient 1; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (a, b) = if a.vars()[..] == b.vars()[..] {
        (a.clone(), b.clone())
    } else {
        let vars = super::poly::union_vars(a.vars(), b.vars());
        (a.with_vars(&vars).unwrap(), b.with_vars(&vars).unwrap())
    };
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars().clone());
    }
    if a.div_exact(&b).is_some() {
        return normalize(b);
    }
    if b.div_exact(&a).is_some() {
        return normalize(a);
    }
    if provably_coprime(&a, &b) {
        return Poly::one(a.vars().clone());
    }
    normalize(gcd_rec(&a, &b))
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars().clone());
    }
    let mut used = a.used_vars();
    for v in b.used_vars() {
        if !used.contains(&v) {
            used.push(v);
        }
    }
    let v = a.vars().iter().find(|w| used.contains(w)).unwrap().clone();
    let (ca, pa) = content_primitive(a, &v);
    let (cb, pb) = content_primitive(b, &v);
    let c = gcd_rec(&ca, &cb);
    let g = if pa.degree_in(&v) == 0 || pb.degree_in(&v) == 0 {
        Poly::one(a.vars().clone())
    } else {
        content_primitive(&subresultant(&pa, &pb, &v), &v).1
    };
    c.mul(&g)
}

/// Content with respect to `var` (a polynomial free of `var`) and primitive part.
pub fn content_primitive(p: &Poly, var: &str) -> (Poly, Poly) {
    let coeffs = p.coeffs_in(var);
    let mut c = Poly::zero(p.vars().clone());
    for k in coeffs.iter().rev() {
        if k.is_zero() {
            continue;
        }
        c = if c.is_zero() { k.clone() } else { gcd_rec(&c, k) };
        if c.is_constant() {
            break;
        }
    }
    if c.is_constant() {
        return (Poly::one(p.vars().clone()), p.clone());
    }
    let c = c.monic();
    let prim = p.div_exact(&c).expect("content divides");
    (c, prim)
}

fn lc_in(coeffs: &[Poly]) -> Poly {
    coeffs.last().cloned().unwrap()
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of coefficient vectors (lowest degree first).
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = lc_in(b);
    let mut r = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db && !r.is_empty() {
        let lr = lc_in(&r);
        let shift = r.len() - 1 - db;
        let mut next: Vec<Poly> = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[shift + j] = next[shift + j].sub(&bc.mul(&lr));
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c.mul(&f)).collect();
    }
    r
}

/// Last nonzero subresultant of `a` and `b` with respect to `var`.
fn subresultant(a: &Poly, b: &Poly, var: &str) -> Poly {
    let vars = a.vars().clone();
    let mut a = trim(a.coeffs_in(var));
    let mut b = trim(b.coeffs_in(var));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one(vars.clone());
    let mut h = Poly::one(vars.clone());
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return Poly::from_coeffs_in(&vars, var, &b);
        }
        if r.len() == 1 {
            return Poly::one(vars);
        }
        let divisor = g.mul(&h.pow(d));
        let nb: Vec<Poly> = r.iter().map(|c| c.div_exact(&divisor).expect("subresultant division")).collect();
        a = b;
        b = nb;
        g = lc_in(&a);
        h = if d == 0 {
            h
        } else if d == 1 {
            g.clone()
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant h update")
        };
    }
}

/// Resultant with respect to `var` (subresultant algorithm).
pub fn resultant(a: &Poly, b: &Poly, var: &str) -> Poly {
    let vars = super::poly::union_vars(a.vars(), b.vars());
    let zero = Poly::zero(vars.clone());
    if a.is_zero() || b.is_zero() {
        return zero;
    }
    let mut a = trim(a.with_vars(&vars).unwrap().coeffs_in(var));
    let mut b = trim(b.with_vars(&vars).unwrap().coeffs_in(var));
    let mut sign = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign = !sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        let r = b[0].pow((a.len() - 1) as u32);
        return if sign { r.neg() } else { r };
    }
    let mut g = Poly::one(vars.clone());
    let mut h = Poly::one(vars.clone());
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return zero;
        }
        let divisor = g.mul(&h.pow(delta));
        let nb: Vec<Poly> = r.iter().map(|c| c.div_exact(&divisor).expect("resultant division")).collect();
        a = b;
        b = nb;
        g = lc_in(&a);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)).expect("resultant h update"),
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let res = if da == 0 {
                b[0].clone()
            } else {
                b[0].pow(da).div_exact(&h.pow(da - 1)).expect("resultant final step")
            };
            return if sign { res.neg() } else { res };
        }
    }
}

/// Squarefree part with respect to all variables.
pub fn squarefree_part(p: &Poly) -> Poly {
    let mut g = p.clone();
    for v in p.used_vars() {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &p.derivative(&v));
    }
    if g.is_constant() {
        return p.clone();
    }
    p.div_exact(&g).expect("gcd divides")
}

pub fn is_unit(p: &Poly) -> bool {
    p.is_constant() && !p.is_zero()
}
