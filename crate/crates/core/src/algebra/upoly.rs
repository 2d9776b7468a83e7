//! Dense univariate polynomials over Q(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

/// Coefficients stored lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        UPoly::new(vec![c])
    }

    /// `x - r`
    pub fn linear(r: &Scalar) -> Self {
        UPoly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::constant(Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division: `(q, r)` with `self = q*d + r`.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k - dd + j] -= &t;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv().unwrap())
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from_int(k as i64)).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(x + a)`
    pub fn taylor_shift(&self, a: &Scalar) -> UPoly {
        // Horner with the linear polynomial x + a
        let xa = UPoly::new(vec![a.clone(), Scalar::one()]);
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xa).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// Multiplicity of the root `r`.
    pub fn root_multiplicity(&self, r: &Scalar) -> usize {
        let lin = UPoly::linear(r);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// Number of distinct real roots of a real polynomial (Sturm sequence).
    pub fn real_root_count(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].divrem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Scalar::one()));
        }
        let changes = |signs: Vec<std::cmp::Ordering>| {
            let nz: Vec<_> = signs.into_iter().filter(|s| *s != std::cmp::Ordering::Equal).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_pos = seq.iter().map(|p| p.leading().real_sign().unwrap()).collect();
        let at_neg = seq
            .iter()
            .map(|p| {
                let s = p.leading().real_sign().unwrap();
                if p.degree().unwrap() % 2 == 1 { s.reverse() } else { s }
            })
            .collect();
        changes(at_neg) - changes(at_pos)
    }

    /// All roots in Q (with multiplicity), found via the rational root test.
    /// For coefficients with imaginary parts, the real-part and imaginary-part
    /// polynomials must share the root. Returns the roots and the cofactor
    /// left after dividing them out.
    pub fn rational_roots(&self) -> (Vec<(Scalar, usize)>, UPoly) {
        let re = UPoly::new(self.coeffs.iter().map(|c| Scalar::real(c.re().clone())).collect());
        let im = UPoly::new(self.coeffs.iter().map(|c| Scalar::real(c.im().clone())).collect());
        let real_part = re.gcd(&im);
        let mut roots = Vec::new();
        let mut rest = self.clone();
        if real_part.degree().unwrap_or(0) == 0 {
            return (roots, rest);
        }
        for r in rational_root_candidates(&real_part) {
            if rest.eval(&r).is_zero() {
                let m = rest.root_multiplicity(&r);
                rest = rest.divrem(&UPoly::linear(&r).pow(m as u32)).0;
                roots.push((r, m));
            }
        }
        (roots, rest)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Candidates p/q for a real polynomial with rational coefficients, including 0.
fn rational_root_candidates(p: &UPoly) -> Vec<Scalar> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.re().denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c.re() * BigRational::from(den.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(Scalar::zero());
    }
    let a0 = &ints[low];
    let an = ints.last().unwrap();
    let ps = divisors(a0);
    let qs = divisors(an);
    let mut seen = std::collections::BTreeSet::new();
    for q in &qs {
        for pp in &ps {
            for s in [pp.clone(), -pp.clone()] {
                let r = BigRational::new(s, q.clone());
                if seen.insert(r.clone()) {
                    out.push(Scalar::real(r));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&k| Scalar::from_int(k)).collect())
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x+2)(x^2+1)
        assert_eq!(up(&[1, 0, 1]).mul(&up(&[-1, 1])).mul(&up(&[2, 1])).real_root_count(), 2);
        assert_eq!(up(&[1, 0, 1]).real_root_count(), 0);
        assert_eq!(up(&[0, 0, 1]).real_root_count(), 1);
        assert_eq!(up(&[5]).real_root_count(), 0);
    }

    #[test]
    fn division_and_gcd() {
        let a = up(&[-1, 0, 1]);
        let b = up(&[-1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q, up(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&up(&[1, 2, 1])), up(&[1, 1]));
    }

    #[test]
    fn finds_rational_roots() {
        // (2x-1)(x-3)(x+1)^2
        let p = up(&[-1, 2]).mul(&up(&[-3, 1])).mul(&up(&[1, 1]).pow(2));
        let (roots, rest) = p.rational_roots();
        assert_eq!(rest.degree(), Some(0));
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&(Scalar::ratio(1, 2), 1)));
        assert!(roots.contains(&(Scalar::from_int(-1), 2)));
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let (roots, rest) = up(&[1, 0, 1]).rational_roots();
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let p = up(&[3, -2, 0, 5]);
        let a = Scalar::ratio(2, 3);
        let s = p.taylor_shift(&a);
        assert_eq!(s.coeff(0), p.eval(&a));
        assert_eq!(s.eval(&Scalar::one()), p.eval(&(&a + &Scalar::one())));
    }
}
