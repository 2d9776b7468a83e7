use serde::{Deserialize, Serialize};

use super::differential::{Chart, ChartPoint};
use super::semigroup::Semigroup;
use crate::algebra::{Point, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Singularity {
    Cusp { at: Point, semigroup: Semigroup },
    Node { b: Scalar, c: Scalar },
}

impl Singularity {
    pub fn delta(&self) -> usize {
        match self {
            Singularity::Cusp { semigroup, .. } => semigroup.delta(),
            Singularity::Node { .. } => 1,
        }
    }

    /// Preimage points on the line, in the given chart.
    pub fn points(&self, chart: Chart) -> Vec<ChartPoint> {
        match self {
            Singularity::Cusp { at, .. } => vec![ChartPoint::new(chart, at.clone())],
            Singularity::Node { b, c } => {
                vec![ChartPoint::new(chart, Point::Finite(b.clone())), ChartPoint::new(chart, Point::Finite(c.clone()))]
            }
        }
    }
}

fn default_expansion() -> ChartPoint {
    ChartPoint::new(Chart::U, Point::Finite(Scalar::from_int(0)))
}

/// A rational curve: the line with cusps and node identifications.
/// Singularity coordinates are given in `chart`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    #[serde(default)]
    pub chart: Chart,
    pub singularities: Vec<Singularity>,
    pub basepoint: ChartPoint,
    #[serde(default = "default_expansion")]
    pub expansion_point: ChartPoint,
}

impl CurveSpec {
    pub fn new(
        chart: Chart,
        singularities: Vec<Singularity>,
        basepoint: ChartPoint,
        expansion_point: ChartPoint,
    ) -> Result<Self> {
        let c = CurveSpec { chart, singularities, basepoint, expansion_point };
        c.validate()?;
        Ok(c)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: CurveSpec = serde_json::from_str(text).map_err(|e| Error::InvalidCurve(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    pub fn validate(&self) -> Result<()> {
        let mut points: Vec<ChartPoint> = Vec::new();
        for s in &self.singularities {
            match s {
                Singularity::Cusp { semigroup, .. } if !semigroup.is_gorenstein() => {
                    return Err(Error::InvalidCurve(format!("cusp semigroup {semigroup} is not Gorenstein")));
                }
                Singularity::Node { b, c } if b == c => {
                    return Err(Error::InvalidCurve("node points must differ".into()));
                }
                _ => {}
            }
            for p in s.points(self.chart) {
                if points.iter().any(|q| q.same_point(&p)) {
                    return Err(Error::InvalidCurve(format!("singular point {p} listed twice")));
                }
                points.push(p);
            }
        }
        for (name, p) in [("basepoint", &self.basepoint), ("expansion point", &self.expansion_point)] {
            if points.iter().any(|q| q.same_point(p)) {
                return Err(Error::InvalidCurve(format!("{name} {p} is a singular point")));
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.singularities.iter().map(Singularity::delta).sum()
    }

    /// One cusp of type `⟨2, 2g+1⟩`.
    pub fn is_single_a_even_cusp(&self) -> bool {
        match self.singularities.as_slice() {
            [Singularity::Cusp { semigroup, .. }] => {
                let g = semigroup.delta() as u32;
                semigroup.gaps() == Semigroup::a_even(g).gaps()
            }
            _ => false,
        }
    }

    /// Two `⟨2,5⟩` cusps at `±1`, parameters based at `u = ∞`.
    pub fn bicuspidal() -> Self {
        let s = Semigroup::new(&[2, 5]).unwrap();
        CurveSpec::new(
            Chart::Z,
            vec![
                Singularity::Cusp { at: Point::Finite(Scalar::from_int(1)), semigroup: s.clone() },
                Singularity::Cusp { at: Point::Finite(Scalar::from_int(-1)), semigroup: s },
            ],
            ChartPoint::new(Chart::U, Point::Infinity),
            default_expansion(),
        )
        .unwrap()
    }

    /// Two `⟨2,2N+1⟩` cusps at `±1`.
    pub fn bicuspidal_a_even(n: u32) -> Self {
        let s = Semigroup::a_even(n);
        CurveSpec::new(
            Chart::Z,
            vec![
                Singularity::Cusp { at: Point::Finite(Scalar::from_int(1)), semigroup: s.clone() },
                Singularity::Cusp { at: Point::Finite(Scalar::from_int(-1)), semigroup: s },
            ],
            ChartPoint::new(Chart::U, Point::Infinity),
            default_expansion(),
        )
        .unwrap()
    }

    /// The monomial curve with one `⟨4,5,6⟩` cusp at `v = ∞`, based at `v = 0`.
    pub fn monomial_456() -> Self {
        CurveSpec::new(
            Chart::Z,
            vec![Singularity::Cusp { at: Point::Infinity, semigroup: Semigroup::new(&[4, 5, 6]).unwrap() }],
            ChartPoint::new(Chart::Z, Point::Finite(Scalar::from_int(0))),
            ChartPoint::new(Chart::Z, Point::Finite(Scalar::from_int(1))),
        )
        .unwrap()
    }

    /// One cusp with the given semigroup at `z = a`, based at `u = ∞`.
    pub fn single_cusp(generators: &[u32], a: i64) -> Result<Self> {
        CurveSpec::new(
            Chart::Z,
            vec![Singularity::Cusp { at: Point::Finite(Scalar::from_int(a)), semigroup: Semigroup::new(generators)? }],
            ChartPoint::new(Chart::U, Point::Infinity),
            default_expansion(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_form() {
        let text = r#"{"singularities":[{"type":"cusp","at":"1","semigroup":[2,5]},{"type":"node","b":"11/10","c":"9/10"}],
            "basepoint":{"chart":"z","at":"0"},"expansion_point":{"chart":"u","at":"0"}}"#;
        let c = CurveSpec::from_json(text).unwrap();
        assert_eq!(c.genus(), 3);
        assert_eq!(c.chart, Chart::Z);
        let back = CurveSpec::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_bad_specs() {
        let non_gorenstein = r#"{"singularities":[{"type":"cusp","at":"1","semigroup":[3,4,5]}],
            "basepoint":{"chart":"z","at":"0"}}"#;
        assert!(matches!(CurveSpec::from_json(non_gorenstein), Err(Error::InvalidCurve(_))));
        let singular_base = r#"{"singularities":[{"type":"cusp","at":"1","semigroup":[2,3]}],
            "basepoint":{"chart":"u","at":"1"}}"#;
        assert!(matches!(CurveSpec::from_json(singular_base), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn staircase_family() {
        for n in 1..=6 {
            let c = CurveSpec::bicuspidal_a_even(n);
            assert_eq!(c.genus(), 2 * n as usize);
        }
        assert!(CurveSpec::single_cusp(&[2, 5], 1).unwrap().is_single_a_even_cusp());
        assert!(!CurveSpec::monomial_456().is_single_a_even_cusp());
    }
}
