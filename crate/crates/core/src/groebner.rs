//! Buchberger's algorithm over Q with a two-block elimination order.
//!
//! Polynomials are kept fraction-free (integer coefficients, primitive).
//! Pair selection uses the sugar degree; pairs are pruned with the
//! Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Poly, Scalar};
use crate::error::{Error, Result};

/// Limits for a Buchberger run.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_reductions: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: Some(2_000_000), max_time: Some(Duration::from_secs(300)) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_reductions: None, max_time: None }
    }

    pub fn seconds(s: u64) -> Self {
        Budget { max_reductions: None, max_time: Some(Duration::from_secs(s)) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Stats {
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub reductions: u64,
    pub zero_reductions: u64,
    pub basis_size: usize,
    pub elapsed_ms: u128,
}

/// Exponents with the two block degrees in front: `[d1, d2, e_0, …]`.
type Mono = Box<[u16]>;

#[derive(Clone)]
struct Ctx {
    n: usize,
    split: usize,
}

impl Ctx {
    fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        let c = a[0].cmp(&b[0]);
        if c != Ordering::Equal {
            return c;
        }
        for i in (0..self.split).rev() {
            if a[2 + i] != b[2 + i] {
                return b[2 + i].cmp(&a[2 + i]);
            }
        }
        let c = a[1].cmp(&b[1]);
        if c != Ordering::Equal {
            return c;
        }
        for i in (self.split..self.n).rev() {
            if a[2 + i] != b[2 + i] {
                return b[2 + i].cmp(&a[2 + i]);
            }
        }
        Ordering::Equal
    }

    fn mono(&self, exps: &[u32]) -> Mono {
        let mut m = vec![0u16; self.n + 2];
        for (i, &e) in exps.iter().enumerate() {
            m[2 + i] = e as u16;
            if i < self.split {
                m[0] += e as u16;
            } else {
                m[1] += e as u16;
            }
        }
        m.into_boxed_slice()
    }

    fn mul(&self, a: &[u16], b: &[u16]) -> Mono {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn divides(&self, a: &[u16], b: &[u16]) -> bool {
        a[0] <= b[0] && a[1] <= b[1] && (2..self.n + 2).all(|i| a[i] <= b[i])
    }

    fn quot(&self, b: &[u16], a: &[u16]) -> Mono {
        b.iter().zip(a).map(|(x, y)| x - y).collect()
    }

    fn lcm(&self, a: &[u16], b: &[u16]) -> Mono {
        let mut m = vec![0u16; self.n + 2];
        for i in 0..self.n {
            m[2 + i] = a[2 + i].max(b[2 + i]);
            if i < self.split {
                m[0] += m[2 + i];
            } else {
                m[1] += m[2 + i];
            }
        }
        m.into_boxed_slice()
    }

    fn coprime(&self, a: &[u16], b: &[u16]) -> bool {
        (2..self.n + 2).all(|i| a[i] == 0 || b[i] == 0)
    }

    fn deg(&self, a: &[u16]) -> u32 {
        a[0] as u32 + a[1] as u32
    }
}

#[derive(Clone)]
struct GPoly {
    terms: Vec<(Mono, BigInt)>,
    sugar: u32,
}

impl GPoly {
    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

fn content(terms: &[(Mono, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(terms: &mut [(Mono, BigInt)]) {
    if terms.is_empty() {
        return;
    }
    let mut g = content(terms);
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a·f − b·t·g` where `t` is a monomial; both inputs sorted descending.
fn combine(ctx: &Ctx, a: &BigInt, f: &[(Mono, BigInt)], b: &BigInt, t: &[u16], g: &[(Mono, BigInt)]) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted: Vec<(Mono, BigInt)> = g.iter().map(|(m, c)| (ctx.mul(m, t), c * b)).collect();
    while i < f.len() || j < shifted.len() {
        if j == shifted.len() {
            out.push((f[i].0.clone(), a * &f[i].1));
            i += 1;
        } else if i == f.len() {
            out.push((shifted[j].0.clone(), -&shifted[j].1));
            j += 1;
        } else {
            match ctx.cmp(&f[i].0, &shifted[j].0) {
                Ordering::Greater => {
                    out.push((f[i].0.clone(), a * &f[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((shifted[j].0.clone(), -&shifted[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a * &f[i].1 - &shifted[j].1;
                    if !c.is_zero() {
                        out.push((f[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

struct Engine {
    ctx: Ctx,
    polys: Vec<GPoly>,
    stats: Stats,
    budget: Budget,
    start: Instant,
}

impl Engine {
    fn check_budget(&self) -> Result<()> {
        let elapsed = self.start.elapsed();
        let over_steps = self.budget.max_reductions.is_some_and(|m| self.stats.reductions > m);
        let over_time = self.budget.max_time.is_some_and(|t| elapsed > t);
        if over_steps || over_time {
            return Err(Error::EliminationTimeout { reductions: self.stats.reductions, elapsed_ms: elapsed.as_millis() });
        }
        Ok(())
    }

    /// Full reduction of `f` modulo the polynomials with indices `basis`.
    fn reduce(&mut self, f: GPoly, basis: &[usize]) -> Result<GPoly> {
        let mut p = f.terms;
        let mut sugar = f.sugar;
        let mut r: Vec<(Mono, BigInt)> = Vec::new();
        let mut steps = 0u32;
        while !p.is_empty() {
            let lm = p[0].0.clone();
            let divisor = basis.iter().copied().find(|&k| self.ctx.divides(self.polys[k].lm(), &lm));
            match divisor {
                Some(k) => {
                    let g = &self.polys[k];
                    let lc_p = p[0].1.clone();
                    let gg = lc_p.gcd(g.lc());
                    let mut a = g.lc() / &gg;
                    let mut b = &lc_p / &gg;
                    if a.is_negative() {
                        a = -a;
                        b = -b;
                    }
                    let t = self.ctx.quot(&lm, g.lm());
                    sugar = sugar.max(g.sugar + self.ctx.deg(&t));
                    let next = combine(&self.ctx, &a, &p[1..], &b, &t, &g.terms[1..]);
                    p = next;
                    if !a.is_one() {
                        for (_, c) in r.iter_mut() {
                            *c *= &a;
                        }
                    }
                    self.stats.reductions += 1;
                    steps += 1;
                    if steps.is_multiple_of(16) {
                        self.check_budget()?;
                        let mut g = content(&p);
                        if !g.is_one() {
                            g = g.gcd(&content(&r));
                            if !g.is_one() && !g.is_zero() {
                                for (_, c) in p.iter_mut().chain(r.iter_mut()) {
                                    *c = &*c / &g;
                                }
                            }
                        }
                    }
                }
                None => {
                    let t = p.remove(0);
                    r.push(t);
                }
            }
        }
        make_primitive(&mut r);
        Ok(GPoly { terms: r, sugar })
    }

    fn spoly(&self, i: usize, j: usize) -> GPoly {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let l = self.ctx.lcm(f.lm(), g.lm());
        let tf = self.ctx.quot(&l, f.lm());
        let tg = self.ctx.quot(&l, g.lm());
        let gg = f.lc().gcd(g.lc());
        let a = g.lc() / &gg;
        let b = f.lc() / &gg;
        // a·tf·f − b·tg·g
        let ftf: Vec<(Mono, BigInt)> = f.terms[1..].iter().map(|(m, c)| (self.ctx.mul(m, &tf), c.clone())).collect();
        let terms = combine(&self.ctx, &a, &ftf, &b, &tg, &g.terms[1..]);
        let sugar = (f.sugar + self.ctx.deg(&tf)).max(g.sugar + self.ctx.deg(&tg));
        GPoly { terms, sugar }
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Pair {
    sugar: u32,
    lcm: Mono,
    i: usize,
    j: usize,
}

/// Gebauer–Möller update of the pair set when `h` joins the basis `g`.
fn update(ctx: &Ctx, polys: &[GPoly], g: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let hl = polys[h].lm().clone();
    let mk = |i: usize| -> Pair {
        let l = ctx.lcm(polys[i].lm(), &hl);
        let sugar = (polys[i].sugar + ctx.deg(&l) - ctx.deg(polys[i].lm())).max(polys[h].sugar + ctx.deg(&l) - ctx.deg(&hl));
        Pair { sugar, lcm: l, i, j: h }
    };
    let mut c: Vec<Pair> = g.iter().map(|&i| mk(i)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let cop = ctx.coprime(polys[p.i].lm(), &hl);
        let redundant = c.iter().chain(d.iter()).any(|q| ctx.divides(&q.lcm, &p.lcm));
        if cop || !redundant {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d.into_iter().filter(|p| !ctx.coprime(polys[p.i].lm(), &hl)).collect();
    pairs.retain(|p| {
        let l_ih = ctx.lcm(polys[p.i].lm(), &hl);
        let l_jh = ctx.lcm(polys[p.j].lm(), &hl);
        !(ctx.divides(&hl, &p.lcm) && ctx.cmp(&l_ih, &p.lcm) != Ordering::Equal && ctx.cmp(&l_jh, &p.lcm) != Ordering::Equal)
    });
    pairs.extend(e);
    g.retain(|&k| !ctx.divides(&hl, polys[k].lm()));
    g.push(h);
}

fn to_gpoly(ctx: &Ctx, p: &Poly) -> Result<GPoly> {
    if !p.is_real() {
        return Err(Error::NonRationalInput);
    }
    let prim = p.primitive();
    let mut terms: Vec<(Mono, BigInt)> = prim
        .terms()
        .map(|(m, c)| (ctx.mono(m.exps()), c.re().to_integer()))
        .collect();
    terms.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
    make_primitive(&mut terms);
    let sugar = terms.iter().map(|(m, _)| ctx.deg(m)).max().unwrap_or(0);
    Ok(GPoly { terms, sugar })
}

fn from_gpoly(vars: &Arc<[String]>, g: &GPoly) -> Poly {
    Poly::from_terms(
        vars.clone(),
        g.terms.iter().map(|(m, c)| (m[2..].iter().map(|&e| e as u32).collect(), Scalar::from_bigint(c.clone()))),
    )
}

/// Reduced Gröbner basis for the block order (first `elim` variables of
/// `vars` ≫ the rest, grevlex inside each block). Outputs are primitive
/// integer polynomials with positive leading coefficient.
pub fn groebner(polys: &[Poly], vars: &Arc<[String]>, elim: usize, budget: &Budget) -> Result<(Vec<Poly>, Stats)> {
    let ctx = Ctx { n: vars.len(), split: elim };
    let mut engine = Engine { ctx: ctx.clone(), polys: Vec::new(), stats: Stats::default(), budget: budget.clone(), start: Instant::now() };
    let mut g: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut inputs: Vec<GPoly> = Vec::new();
    for p in polys {
        let gp = to_gpoly(&ctx, &p.with_vars(vars)?)?;
        if !gp.terms.is_empty() {
            inputs.push(gp);
        }
    }
    inputs.sort_by(|a, b| ctx.cmp(a.lm(), b.lm()));
    for f in inputs {
        let r = engine.reduce(f, &g)?;
        if r.terms.is_empty() {
            continue;
        }
        engine.polys.push(r);
        let h = engine.polys.len() - 1;
        update(&ctx, &engine.polys, &mut g, &mut pairs, h);
    }
    while !pairs.is_empty() {
        engine.check_budget()?;
        // normal strategy refined by sugar
        let best = (0..pairs.len())
            .min_by(|&a, &b| pairs[a].sugar.cmp(&pairs[b].sugar).then_with(|| ctx.cmp(&pairs[a].lcm, &pairs[b].lcm)))
            .unwrap();
        let pair = pairs.swap_remove(best);
        engine.stats.pairs_considered += 1;
        let s = engine.spoly(pair.i, pair.j);
        if s.terms.is_empty() {
            engine.stats.zero_reductions += 1;
            continue;
        }
        engine.stats.pairs_reduced += 1;
        let r = engine.reduce(s, &g)?;
        if r.terms.is_empty() {
            engine.stats.zero_reductions += 1;
            continue;
        }
        engine.polys.push(r);
        let h = engine.polys.len() - 1;
        update(&ctx, &engine.polys, &mut g, &mut pairs, h);
    }
    // minimal basis, then interreduce
    let mut minimal: Vec<usize> = Vec::new();
    let mut sorted = g.clone();
    sorted.sort_by(|&a, &b| ctx.cmp(engine.polys[a].lm(), engine.polys[b].lm()));
    for &k in &sorted {
        if !minimal.iter().any(|&m| ctx.divides(engine.polys[m].lm(), engine.polys[k].lm())) {
            minimal.push(k);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for &k in &minimal {
        let others: Vec<usize> = minimal.iter().copied().filter(|&m| m != k).collect();
        let f = engine.polys[k].clone();
        // leading term is not divisible by the others, so only tails change
        let r = engine.reduce(f, &others)?;
        reduced.push(r);
    }
    engine.stats.basis_size = reduced.len();
    engine.stats.elapsed_ms = engine.start.elapsed().as_millis();
    let mut out: Vec<Poly> = reduced.iter().map(|r| from_gpoly(vars, r)).collect();
    out.sort_by(|a, b| {
        let la = ctx.mono(a.leading().unwrap().0.exps());
        let lb = ctx.mono(b.leading().unwrap().0.exps());
        ctx.cmp(&la, &lb)
    });
    Ok((out, engine.stats))
}

/// Elements of the reduced basis that only involve `keep`, expressed in `keep`.
pub fn eliminate(polys: &[Poly], elim: &[&str], keep: &[&str], budget: &Budget) -> Result<(Vec<Poly>, Stats)> {
    let vars: Arc<[String]> = elim.iter().chain(keep).map(|s| s.to_string()).collect::<Vec<_>>().into();
    let (gb, stats) = groebner(polys, &vars, elim.len(), budget)?;
    let keep_vars: Arc<[String]> = keep.iter().map(|s| s.to_string()).collect::<Vec<_>>().into();
    let out = gb
        .into_iter()
        .filter(|p| elim.iter().all(|v| !p.contains_var(v)))
        .map(|p| p.with_vars(&keep_vars).unwrap())
        .collect();
    Ok((out, stats))
}

/// Set of leading monomials, for tests and diagnostics.
pub fn leading_monomials(gb: &[Poly]) -> BTreeSet<Vec<u32>> {
    gb.iter().filter_map(|p| p.leading().map(|(m, _)| m.exps().to_vec())).collect()
}
