use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical semigroup given by generators with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Semigroup {
    generators: Vec<u32>,
    gaps: Vec<u32>,
}

impl Semigroup {
    pub fn new(generators: &[u32]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        let g = generators.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("generators {generators:?} have gcd {g}")));
        }
        let gaps = compute_gaps(generators);
        Ok(Semigroup { generators: generators.to_vec(), gaps })
    }

    /// `⟨2, 2N+1⟩`
    pub fn a_even(n: u32) -> Self {
        Semigroup::new(&[2, 2 * n + 1]).unwrap()
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn delta(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> u32 {
        self.gaps.last().map_or(0, |g| g + 1)
    }

    pub fn contains(&self, m: u32) -> bool {
        !self.gaps.contains(&m)
    }

    pub fn is_gorenstein(&self) -> bool {
        self.conductor() as usize == 2 * self.delta()
    }

    /// Members `m ≤ bound`.
    pub fn elements_up_to(&self, bound: u32) -> Vec<u32> {
        (0..=bound).filter(|&m| self.contains(m)).collect()
    }

    pub fn weierstrass_partition(&self) -> Partition {
        weierstrass_partition(&self.gaps).expect("gaps of a semigroup are strictly increasing")
    }
}

fn compute_gaps(generators: &[u32]) -> Vec<u32> {
    // Frobenius number is below (min generator) * (max generator).
    let bound = (generators.iter().min().unwrap() * generators.iter().max().unwrap()) as usize + 1;
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for m in 1..=bound {
        member[m] = generators.iter().any(|&g| (g as usize) <= m && member[m - g as usize]);
    }
    (1..=bound).filter(|&m| !member[m]).map(|m| m as u32).collect()
}

impl TryFrom<Vec<u32>> for Semigroup {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Semigroup::new(&v)
    }
}

impl From<Semigroup> for Vec<u32> {
    fn from(s: Semigroup) -> Vec<u32> {
        s.generators
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// `λ_i = w_{n+1-i} − (n − i)` for gaps `w_1 < … < w_n`.
pub fn weierstrass_partition(gaps: &[u32]) -> Result<Partition> {
    let n = gaps.len();
    let mut parts = Vec::with_capacity(n);
    for i in 1..=n {
        let w = gaps[n - i] as i64;
        parts.push(w - (n - i) as i64);
    }
    if parts.iter().any(|&p| p <= 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedGaps(format!("{gaps:?} gives {parts:?}")));
    }
    Ok(Partition { parts: parts.into_iter().map(|p| p as u32).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_sets() {
        assert_eq!(Semigroup::new(&[4, 5, 6]).unwrap().gaps(), &[1, 2, 3, 7]);
        assert_eq!(Semigroup::new(&[2, 5]).unwrap().gaps(), &[1, 3]);
        assert!(Semigroup::new(&[1]).unwrap().gaps().is_empty());
        assert_eq!(Semigroup::new(&[1]).unwrap().conductor(), 0);
        assert_eq!(Semigroup::new(&[2, 7]).unwrap().gaps(), &[1, 3, 5]);
        assert!(matches!(Semigroup::new(&[4, 6]), Err(Error::InvalidSemigroup(_))));
    }

    #[test]
    fn gorenstein() {
        let s = Semigroup::new(&[4, 5, 6]).unwrap();
        assert_eq!((s.conductor(), s.delta()), (8, 4));
        assert!(s.is_gorenstein());
        assert!(Semigroup::new(&[2, 5]).unwrap().is_gorenstein());
        assert!(Semigroup::new(&[3, 5]).unwrap().is_gorenstein());
        assert!(Semigroup::new(&[4, 5]).unwrap().is_gorenstein());
        assert!(!Semigroup::new(&[3, 4, 5]).unwrap().is_gorenstein());
    }

    #[test]
    fn partitions() {
        let p = |g: &[u32]| weierstrass_partition(g).unwrap().parts;
        assert_eq!(p(&[1, 2, 3, 7]), vec![4, 1, 1, 1]);
        assert_eq!(p(&[1, 3]), vec![2, 1]);
        assert_eq!(p(&[1, 3, 5]), vec![3, 2, 1]);
        assert_eq!(p(&[1, 2, 5]), vec![3, 1, 1]);
        assert!(matches!(weierstrass_partition(&[3, 1]), Err(Error::MalformedGaps(_))));
    }
}
