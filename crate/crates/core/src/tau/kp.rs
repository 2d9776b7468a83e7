use serde::{Deserialize, Serialize};

use super::space_ctx;
use crate::algebra::gcd::squarefree_part;
use crate::algebra::{Poly, RationalFunction, Scalar, UPoly};
use crate::error::{Error, Result};
use num_traits::Zero;

/// `u = 2 ∂²ₓ ln τ = 2(τ τ_xx − τ_x²)/τ²`.
pub fn u_from_tau(tau: &Poly) -> Result<RationalFunction> {
    if tau.is_zero() {
        return Err(Error::ZeroTau);
    }
    let tau = tau.with_vars(&crate::algebra::poly::union_vars(&space_ctx(), tau.vars()))?;
    let tx = tau.derivative("x");
    let txx = tx.derivative("x");
    let num = tau.mul(&txx).sub(&tx.mul(&tx)).scale(&Scalar::from_int(2));
    RationalFunction::new(num, tau.mul(&tau))
}

/// `P / B^k` over a fixed base `B`.
#[derive(Clone)]
struct Frac {
    p: Poly,
    k: u32,
}

struct Calculus {
    base: Poly,
    dbase: [Poly; 3],
    powers: Vec<Poly>,
}

impl Calculus {
    fn new(base: Poly) -> Self {
        let dbase = ["x", "y", "t"].map(|v| base.derivative(v));
        Calculus { powers: vec![Poly::one(base.vars().clone())], base, dbase }
    }

    fn pow(&mut self, k: u32) -> Poly {
        while self.powers.len() <= k as usize {
            let next = self.powers.last().unwrap().mul(&self.base);
            self.powers.push(next);
        }
        self.powers[k as usize].clone()
    }

    fn lift(&mut self, f: &Frac, k: u32) -> Poly {
        let b = self.pow(k - f.k);
        f.p.mul(&b)
    }

    fn d(&mut self, f: &Frac, var: usize) -> Frac {
        let name = ["x", "y", "t"][var];
        // (P' B − k P B') / B^{k+1}
        let p = f.p.derivative(name).mul(&self.base).sub(&f.p.mul(&self.dbase[var]).scale(&Scalar::from_int(f.k as i64)));
        Frac { p, k: f.k + 1 }
    }

    fn add(&mut self, a: &Frac, b: &Frac) -> Frac {
        let k = a.k.max(b.k);
        Frac { p: self.lift(a, k).add(&self.lift(b, k)), k }
    }

    fn scale(&self, a: &Frac, c: i64) -> Frac {
        Frac { p: a.p.scale(&Scalar::from_int(c)), k: a.k }
    }

    fn mul(&self, a: &Frac, b: &Frac) -> Frac {
        Frac { p: a.p.mul(&b.p), k: a.k + b.k }
    }
}

/// Numerator of `(−4u_t + 6u u_x + u_xxx)_x − 3u_yy` over a power of the
/// squarefree part of `u`'s denominator. Zero exactly when `u` solves KP1.
pub fn kp1_residual(u: &RationalFunction) -> Poly {
    let ctx = crate::algebra::poly::union_vars(&space_ctx(), u.vars());
    let u = u.with_vars(&ctx).unwrap();
    if u.is_zero() {
        return Poly::zero(ctx);
    }
    let den = u.den().clone();
    let base = squarefree_part(&den);
    // den divides base^m for m at most deg(den)
    let mut m = 0u32;
    let mut pw = Poly::one(ctx.clone());
    let cofactor = loop {
        if let Some(q) = pw.div_exact(&den) {
            break q;
        }
        pw = pw.mul(&base);
        m += 1;
    };
    let mut c = Calculus::new(base);
    let u = Frac { p: u.num().mul(&cofactor), k: m };
    let ux = c.d(&u, 0);
    let uxx = c.d(&ux, 0);
    let uxxx = c.d(&uxx, 0);
    let ut = c.d(&u, 2);
    let uy = c.d(&u, 1);
    let uyy = c.d(&uy, 1);
    let a = c.scale(&ut, -4);
    let b = c.scale(&c.mul(&u, &ux), 6);
    let inner = c.add(&a, &b);
    let inner = c.add(&inner, &uxxx);
    let outer = c.d(&inner, 0);
    let r = c.add(&outer, &c.scale(&uyy, -3));
    r.p
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayReport {
    pub num_degree: u32,
    pub den_degree: u32,
    pub gap: u32,
    pub top_form_definite: bool,
    pub ray_ratio: f64,
    pub passed: bool,
}

/// Ray directions `(a/c, b/c)` on the unit circle with rational coordinates.
const RAYS: [(i64, i64, i64); 16] = [
    (1, 0, 1),
    (12, 5, 13),
    (4, 3, 5),
    (3, 4, 5),
    (5, 12, 13),
    (0, 1, 1),
    (-5, 12, 13),
    (-4, 3, 5),
    (-1, 0, 1),
    (-12, -5, 13),
    (-4, -3, 5),
    (-3, -4, 5),
    (0, -1, 1),
    (5, -12, 13),
    (4, -3, 5),
    (8, -15, 17),
];

/// Top homogeneous part in `(x, y)` at time `t` is nonzero away from the origin.
fn top_form_definite(p: &Poly, t: &Scalar) -> bool {
    let p = p.eval_var("t", t);
    let d = p.degree_in_vars(&["x", "y"]).unwrap_or(0);
    // H(x, y) restricted to y = 1 and to (1, 0)
    let mut coeffs = vec![Scalar::zero(); d as usize + 1];
    let (ix, iy) = (p.var_index("x").unwrap(), p.var_index("y").unwrap());
    for (m, c) in p.terms() {
        if m.0[ix] + m.0[iy] == d {
            coeffs[m.0[ix] as usize] += c;
        }
    }
    let h = UPoly::new(coeffs);
    !h.coeff(d as usize).is_zero() && h.real_root_count() == 0
}

fn max_weighted(u: &RationalFunction, r: i64, t: &Scalar) -> f64 {
    let r2 = Scalar::from_int(r * r);
    RAYS.iter()
        .map(|&(a, b, c)| {
            let x = Scalar::ratio(r * a, c);
            let y = Scalar::ratio(r * b, c);
            let v = u.eval_named(&[("x", x), ("y", y), ("t", t.clone())]).unwrap_or_else(|_| Scalar::zero());
            (&v * &(&r2 * &r2)).to_f64().0.abs()
        })
        .fold(0.0, f64::max)
}

/// Decay of `u` in the `(x, y)` plane at time `t`.
///
/// Passes when `deg den − deg num ≥ 2` jointly in `(x, y)`, the top form of
/// the denominator is definite, and `|u|·r⁴` at radius 50 stays within ten
/// times its radius-25 maximum.
pub fn decay_check(u: &RationalFunction, t: &Scalar) -> Result<DecayReport> {
    let ctx = crate::algebra::poly::union_vars(&space_ctx(), u.vars());
    let u = u.with_vars(&ctx)?;
    if u.is_zero() {
        return Ok(DecayReport {
            num_degree: 0,
            den_degree: 0,
            gap: 0,
            top_form_definite: true,
            ray_ratio: 0.0,
            passed: true,
        });
    }
    let num_degree = u.num().eval_var("t", t).degree_in_vars(&["x", "y"]).unwrap_or(0);
    let den_degree = u.den().eval_var("t", t).degree_in_vars(&["x", "y"]).unwrap_or(0);
    let gap = den_degree.saturating_sub(num_degree);
    let definite = top_form_definite(u.den(), t);
    let near = max_weighted(&u, 25, t);
    let far = max_weighted(&u, 50, t);
    let ray_ratio = if near > 0.0 { far / near } else { 0.0 };
    let passed = den_degree >= num_degree + 2 && definite && ray_ratio <= 10.0;
    let report = DecayReport { num_degree, den_degree, gap, top_form_definite: definite, ray_ratio, passed };
    if !passed {
        return Err(Error::DecayMismatch(format!("{report:?}")));
    }
    Ok(report)
}
