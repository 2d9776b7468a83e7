//! Exact linear algebra over Q(i).

use num_traits::{One, Zero};

use crate::algebra::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form; returns the reduced matrix (zero rows dropped)
/// and the pivot columns.
pub fn rref(m: &Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().unwrap();
        for c in col..ncols {
            a[row][c] = &a[row][c] * &inv;
        }
        for r in 0..a.len() {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..ncols {
                let t = &f * &a[row][c];
                a[r][c] -= &t;
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Basis of `{v : m v = 0}`, one vector per free column, in column order.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[row][free];
        }
        out.push(v);
    }
    out
}

/// Solution set of `a x = b`: a particular solution with free variables set
/// to zero, the free columns, and the nullspace. `None` if inconsistent;
/// in that case the index of an inconsistent equation is reported.
pub enum AffineSolution {
    Solved { particular: Vec<Scalar>, free: Vec<usize> },
    Inconsistent { equation: usize },
}

pub fn solve_affine(a: &Matrix, b: &[Scalar], ncols: usize) -> AffineSolution {
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        // locate an original equation that is not implied by the others
        let equation = (0..a.len())
            .find(|&k| {
                let sub: Matrix = aug[..=k].to_vec();
                rref(&sub, ncols + 1).1.last() == Some(&ncols)
            })
            .unwrap_or(0);
        return AffineSolution::Inconsistent { equation };
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[row][ncols].clone();
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    AffineSolution::Solved { particular: x, free }
}

pub fn mat_vec(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            let mut acc = Scalar::zero();
            for (x, y) in row.iter().zip(v) {
                acc += &(x * y);
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&k| Scalar::from_int(k)).collect()).collect()
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn affine_solve() {
        let a = m(&[&[1, 0, -1, 0], &[0, 1, 0, -1]]);
        let b = vec![Scalar::from_int(16), Scalar::from_int(-22)];
        match solve_affine(&a, &b, 4) {
            AffineSolution::Solved { particular, free } => {
                assert_eq!(particular, vec![Scalar::from_int(16), Scalar::from_int(-22), Scalar::zero(), Scalar::zero()]);
                assert_eq!(free, vec![2, 3]);
            }
            AffineSolution::Inconsistent { .. } => panic!("consistent system"),
        }
        let bad = m(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            solve_affine(&bad, &[Scalar::from_int(1), Scalar::from_int(2)], 2),
            AffineSolution::Inconsistent { equation: 1 }
        ));
    }
}
