use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::differential::{Chart, ChartPoint, Differential, DifferentialJson};
use super::semigroup::Semigroup;
use super::spec::{CurveSpec, Singularity};
use crate::algebra::{parse_rational, Point, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, rref};

/// A basis differential tagged with its singularity and its pole order there.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub diff: Differential,
    pub block: usize,
    pub pole_order: usize,
}

/// Dualizing-differential basis of a curve, all in one chart.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveBasis {
    pub chart: Chart,
    pub elements: Vec<BasisElement>,
}

impl CurveBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn differentials(&self) -> Vec<Differential> {
        self.elements.iter().map(|e| e.diff.clone()).collect()
    }

    /// Index (0-based) of the minimal-pole-order element of each block.
    pub fn block_leads(&self) -> Vec<(usize, usize)> {
        let mut blocks: Vec<usize> = self.elements.iter().map(|e| e.block).collect();
        blocks.sort();
        blocks.dedup();
        blocks
            .into_iter()
            .map(|b| {
                let idx = self
                    .elements
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.block == b)
                    .min_by_key(|(_, e)| e.pole_order)
                    .unwrap()
                    .0;
                (b, idx)
            })
            .collect()
    }

    pub fn to_json(&self) -> BasisJson {
        BasisJson {
            differentials: self.elements.iter().map(|e| e.diff.to_chart(self.chart).to_json()).collect(),
            blocks: self.elements.iter().map(|e| e.block).collect(),
            pole_orders: self.elements.iter().map(|e| e.pole_order).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisJson {
    pub differentials: Vec<DifferentialJson>,
    #[serde(default)]
    pub blocks: Vec<usize>,
    #[serde(default)]
    pub pole_orders: Vec<usize>,
}

/// The form with a pole of order `k` at `p`: `dv/(v−a)^k`, or `v^(k−2) dv` at infinity.
fn pole_form(p: &ChartPoint, k: usize) -> Differential {
    let v = p.chart.var();
    let expr = match &p.at {
        Point::Finite(a) => format!("1/({v} - ({a}))^{k}"),
        Point::Infinity => format!("{v}^{}", k - 2),
    };
    Differential::new(p.chart, parse_rational(&expr, &[v]).unwrap())
}

/// Basis of dualizing differentials supported at a monomial cusp.
///
/// Candidates are pole-order forms `2 ≤ k ≤ d+1` at the cusp; the conditions
/// are `Res(w^m ω) = 0` for semigroup members `m ≤ d`.
pub fn cusp_differential_basis(at: &ChartPoint, s: &Semigroup) -> Result<Vec<(Differential, usize)>> {
    let d = s.conductor() as usize;
    let orders: Vec<usize> = (2..=d + 1).collect();
    let forms: Vec<Differential> = orders.iter().map(|&k| pole_form(at, k)).collect();
    // columns ordered by descending pole order so that echelon pivots are the top orders
    let cols: Vec<usize> = (0..forms.len()).rev().collect();
    let mut system = Vec::new();
    for m in s.elements_up_to(d as u32) {
        let mut row = Vec::with_capacity(cols.len());
        for &c in &cols {
            row.push(forms[c].residue_with_monomial(at, m)?);
        }
        system.push(row);
    }
    let ns = if system.is_empty() {
        (0..cols.len()).map(|i| (0..cols.len()).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
    } else {
        nullspace(&system, cols.len())
    };
    if ns.len() != s.delta() {
        return Err(Error::RankDeficient { expected: s.delta(), found: ns.len() });
    }
    let (canon, pivots) = rref(&ns, cols.len());
    let mut out: Vec<(Differential, usize)> = canon
        .iter()
        .zip(&pivots)
        .map(|(row, &piv)| {
            let mut acc: Option<Differential> = None;
            for (j, &c) in cols.iter().enumerate() {
                if row[j].is_zero() {
                    continue;
                }
                let term = forms[c].scale(&row[j]);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
            (acc.unwrap(), orders[cols[piv]])
        })
        .collect();
    out.sort_by_key(|(_, k)| *k);
    Ok(out)
}

/// `−(1/(v−b) − 1/(v−c)) dv` in the chart of `b, c`, transported to `chart`.
pub fn node_differential(b: &Scalar, c: &Scalar, spec_chart: Chart, chart: Chart) -> Differential {
    let v = spec_chart.var();
    let expr = format!("-(1/({v} - ({b})) - 1/({v} - ({c})))");
    Differential::new(spec_chart, parse_rational(&expr, &[v]).unwrap()).to_chart(chart)
}

/// Concatenated local bases, transported to the basepoint chart.
pub fn curve_differential_basis(c: &CurveSpec) -> Result<CurveBasis> {
    let chart = c.basepoint.chart;
    let mut elements = Vec::new();
    for (block, s) in c.singularities.iter().enumerate() {
        match s {
            Singularity::Cusp { at, semigroup } => {
                let p = ChartPoint::new(c.chart, at.clone());
                for (d, k) in cusp_differential_basis(&p, semigroup)? {
                    elements.push(BasisElement { diff: d.to_chart(chart), block, pole_order: k });
                }
            }
            Singularity::Node { b, c: cc } => {
                elements.push(BasisElement { diff: node_differential(b, cc, c.chart, chart), block, pole_order: 1 });
            }
        }
    }
    let basis = CurveBasis { chart, elements };
    if basis.len() != c.genus() {
        return Err(Error::RankDeficient { expected: c.genus(), found: basis.len() });
    }
    check_rosenlicht(&basis, c)?;
    Ok(basis)
}

/// Builds a basis from explicitly supplied differentials, inferring blocks
/// from pole locations.
pub fn basis_from_override(c: &CurveSpec, diffs: &[Differential]) -> Result<CurveBasis> {
    let chart = c.basepoint.chart;
    if diffs.len() != c.genus() {
        return Err(Error::RankDeficient { expected: c.genus(), found: diffs.len() });
    }
    let mut elements = Vec::new();
    for d in diffs {
        let poles = d.poles()?;
        let mut block = None;
        for (p, _) in &poles {
            let owner = c.singularities.iter().position(|s| s.points(c.chart).iter().any(|q| q.same_point(p)));
            match (owner, block) {
                (None, _) => return Err(Error::ResidueCondition(format!("{d} has a pole at the smooth point {p}"))),
                (Some(o), None) => block = Some(o),
                (Some(o), Some(b)) if o != b => {
                    return Err(Error::InvalidCurve(format!("{d} has poles at two singularities")))
                }
                _ => {}
            }
        }
        let block = block.ok_or_else(|| Error::InvalidCurve(format!("{d} is regular everywhere")))?;
        let order = poles.iter().map(|(_, k)| *k).max().unwrap_or(0);
        elements.push(BasisElement { diff: d.to_chart(chart), block, pole_order: order });
    }
    let basis = CurveBasis { chart, elements };
    for (b, s) in c.singularities.iter().enumerate() {
        let members: Vec<&BasisElement> = basis.elements.iter().filter(|e| e.block == b).collect();
        if members.len() != s.delta() {
            return Err(Error::RankDeficient { expected: s.delta(), found: members.len() });
        }
        let p = &s.points(c.chart)[0];
        let window = match s {
            Singularity::Cusp { semigroup, .. } => semigroup.conductor() as usize + 2,
            Singularity::Node { .. } => 2,
        };
        let rows: Vec<Vec<Scalar>> = members
            .iter()
            .map(|e| {
                let (v, coeffs) = e.diff.local_expansion(p, window)?;
                // principal part: coefficients of w^-1, w^-2, ...
                Ok((0..window)
                    .map(|k| {
                        let want = -(k as i64) - 1 - v;
                        if want >= 0 && (want as usize) < coeffs.len() {
                            coeffs[want as usize].clone()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        if rank(&rows, window) != members.len() {
            return Err(Error::RankDeficient { expected: members.len(), found: rank(&rows, window) });
        }
    }
    check_rosenlicht(&basis, c)?;
    Ok(basis)
}

/// Re-checks the residue conditions for every basis element at every
/// singularity, and regularity at smooth points.
pub fn check_rosenlicht(basis: &CurveBasis, c: &CurveSpec) -> Result<()> {
    for e in &basis.elements {
        for s in &c.singularities {
            match s {
                Singularity::Cusp { at, semigroup } => {
                    let p = ChartPoint::new(c.chart, at.clone());
                    for m in semigroup.elements_up_to(semigroup.conductor()) {
                        let r = e.diff.residue_with_monomial(&p, m)?;
                        if !r.is_zero() {
                            return Err(Error::ResidueCondition(format!(
                                "Res at {p} of w^{m} * {} is {r}",
                                e.diff
                            )));
                        }
                    }
                }
                Singularity::Node { .. } => {
                    let pts = s.points(c.chart);
                    let r = &e.diff.residue(&pts[0])? + &e.diff.residue(&pts[1])?;
                    if !r.is_zero() {
                        return Err(Error::ResidueCondition(format!("residues of {} at node sum to {r}", e.diff)));
                    }
                }
            }
        }
        for (p, _) in e.diff.poles()? {
            let singular = c.singularities.iter().any(|s| s.points(c.chart).iter().any(|q| q.same_point(&p)));
            if !singular {
                return Err(Error::ResidueCondition(format!("{} has a pole at the smooth point {p}", e.diff)));
            }
        }
    }
    Ok(())
}

/// The basis printed for the two `⟨2,5⟩` cusps: `4/(u−1)²`, `−12u²/(u−1)⁴`
/// and their mirror images at `−1`, in the `u` chart.
pub fn bicuspidal_override() -> Vec<Differential> {
    ["4/(u-1)^2", "-12*u^2/(u-1)^4", "4/(u+1)^2", "-12*u^2/(u+1)^4"]
        .iter()
        .map(|e| Differential::parse(Chart::U, e).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(a: i64) -> ChartPoint {
        ChartPoint::new(Chart::Z, Point::Finite(Scalar::from_int(a)))
    }

    #[test]
    fn a4_cusp_basis() {
        let b = cusp_differential_basis(&z(1), &Semigroup::new(&[2, 5]).unwrap()).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], (Differential::parse(Chart::Z, "1/(z-1)^2").unwrap(), 2));
        assert_eq!(b[1], (Differential::parse(Chart::Z, "1/(z-1)^4").unwrap(), 4));
    }

    #[test]
    fn monomial_456_basis_at_infinity() {
        let inf = ChartPoint::new(Chart::Z, Point::Infinity);
        let b = cusp_differential_basis(&inf, &Semigroup::new(&[4, 5, 6]).unwrap()).unwrap();
        let got: Vec<Differential> = b.into_iter().map(|x| x.0).collect();
        let want: Vec<Differential> =
            ["1", "z", "z^2", "z^6"].iter().map(|e| Differential::parse(Chart::Z, e).unwrap()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn a2_cusp_at_zero() {
        let b = cusp_differential_basis(&z(0), &Semigroup::new(&[2, 3]).unwrap()).unwrap();
        assert_eq!(b, vec![(Differential::parse(Chart::Z, "1/z^2").unwrap(), 2)]);
    }

    #[test]
    fn node_differentials() {
        let d = node_differential(&Scalar::from_int(2), &Scalar::from_int(3), Chart::Z, Chart::U);
        assert_eq!(d, Differential::parse(Chart::U, "-1/((1-2*u)*(1-3*u))").unwrap());
        let pts = [z(2), z(3)];
        let s = &d.residue(&pts[0]).unwrap() + &d.residue(&pts[1]).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn override_matches_canonical_up_to_scale() {
        let c = CurveSpec::bicuspidal();
        let canon = curve_differential_basis(&c).unwrap();
        let over = basis_from_override(&c, &bicuspidal_override()).unwrap();
        let scales = [-4, 12, -4, 12];
        for ((a, b), k) in canon.elements.iter().zip(&over.elements).zip(scales) {
            assert_eq!(a.diff.scale(&Scalar::from_int(k)), b.diff);
            assert_eq!((a.block, a.pole_order), (b.block, b.pole_order));
        }
    }

    #[test]
    fn override_with_wrong_residue_rejected() {
        let c = CurveSpec::bicuspidal();
        let mut diffs = bicuspidal_override();
        diffs[1] = Differential::parse(Chart::U, "1/(u-1)^3").unwrap();
        assert!(basis_from_override(&c, &diffs).is_err());
    }
}
