use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    laurent_expand, parse_rational, partial_fractions, Point, Poly, RationalFunction, Scalar,
};
use crate::error::{Error, Result};

/// The two affine charts of the line, related by `u = 1/z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    #[default]
    Z,
    U,
}

impl Chart {
    pub fn var(self) -> &'static str {
        match self {
            Chart::Z => "z",
            Chart::U => "u",
        }
    }

    pub fn other(self) -> Chart {
        match self {
            Chart::Z => Chart::U,
            Chart::U => Chart::Z,
        }
    }
}

impl std::str::FromStr for Chart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" => Ok(Chart::Z),
            "u" => Ok(Chart::U),
            other => Err(Error::InvalidCurve(format!("unknown chart '{other}'"))),
        }
    }
}

/// A point of the line given in a chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: Chart,
    pub at: Point,
}

impl ChartPoint {
    pub fn new(chart: Chart, at: Point) -> Self {
        ChartPoint { chart, at }
    }

    pub fn in_chart(&self, chart: Chart) -> Point {
        if chart == self.chart {
            self.at.clone()
        } else {
            self.at.inverted()
        }
    }

    pub fn same_point(&self, other: &ChartPoint) -> bool {
        self.in_chart(Chart::Z) == other.in_chart(Chart::Z)
    }
}

impl fmt::Display for ChartPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.chart.var(), self.at)
    }
}

/// `g(v) dv` in the coordinate `v` of a chart. The coefficient may depend on
/// further symbolic parameters.
#[derive(Clone, PartialEq, Eq)]
pub struct Differential {
    pub chart: Chart,
    pub g: RationalFunction,
}

impl Differential {
    pub fn new(chart: Chart, g: RationalFunction) -> Self {
        Differential { chart, g }
    }

    pub fn parse(chart: Chart, expr: &str) -> Result<Self> {
        Ok(Differential::new(chart, parse_rational(expr, &[chart.var()])?))
    }

    /// Parses with extra parameter names allowed.
    pub fn parse_with(chart: Chart, expr: &str, params: &[&str]) -> Result<Self> {
        let mut vars = vec![chart.var()];
        vars.extend_from_slice(params);
        Ok(Differential::new(chart, parse_rational(expr, &vars)?))
    }

    pub fn var(&self) -> &'static str {
        self.chart.var()
    }

    pub fn is_zero(&self) -> bool {
        self.g.is_zero()
    }

    /// The same differential in `chart`: `g(z) dz = −g(1/u)/u² du`.
    pub fn to_chart(&self, chart: Chart) -> Differential {
        if chart == self.chart {
            return self.clone();
        }
        let (from, to) = (self.chart.var(), chart.var());
        let inv = self.g.invert_var(from);
        let ctx = crate::algebra::poly::union_vars(inv.vars(), &vec![to.to_string()].into());
        let renamed = rename_var(&inv.with_vars(&ctx).unwrap(), from, to);
        let w = Poly::var(renamed.vars().clone(), to).unwrap();
        let factor = RationalFunction::new(Poly::constant(w.vars().clone(), -Scalar::one()), w.pow(2)).unwrap();
        Differential::new(chart, renamed.mul(&factor).trimmed_to(to))
    }

    pub fn scale(&self, c: &Scalar) -> Differential {
        Differential::new(self.chart, self.g.scale(c))
    }

    pub fn add(&self, other: &Differential) -> Differential {
        let o = other.to_chart(self.chart);
        Differential::new(self.chart, self.g.add(&o.g))
    }

    /// Laurent expansion at `p` in the local coordinate `v − a` (or `1/v` at
    /// infinity) of the chart in which `p` is given: `(valuation, coeffs)` of
    /// the coefficient of `dw`.
    pub fn local_expansion(&self, p: &ChartPoint, order: usize) -> Result<(i64, Vec<Scalar>)> {
        let (chart, a) = match &p.at {
            Point::Finite(a) => (p.chart, a.clone()),
            Point::Infinity => (p.chart.other(), Scalar::zero()),
        };
        let d = self.to_chart(chart);
        laurent_expand(&d.g, chart.var(), &a, order)
    }

    /// `Res_p(f · ω)` for `f = w^m` in the local coordinate `w` at `p`.
    pub fn residue_with_monomial(&self, p: &ChartPoint, m: u32) -> Result<Scalar> {
        if self.g.is_zero() {
            return Ok(Scalar::zero());
        }
        let (v, coeffs) = self.local_expansion(p, 64)?;
        // coefficient of w^{-1} in w^m · Σ c_k w^{v+k}
        let k = -1 - m as i64 - v;
        if k < 0 {
            return Ok(Scalar::zero());
        }
        let k = k as usize;
        if k >= coeffs.len() {
            let (_, longer) = self.local_expansion(p, k + 1)?;
            return Ok(longer[k].clone());
        }
        Ok(coeffs[k].clone())
    }

    pub fn residue(&self, p: &ChartPoint) -> Result<Scalar> {
        self.residue_with_monomial(p, 0)
    }

    /// Poles with orders, as points of the differential's own chart plus
    /// possibly infinity.
    pub fn poles(&self) -> Result<Vec<(ChartPoint, usize)>> {
        if self.g.is_zero() {
            return Ok(vec![]);
        }
        let pf = partial_fractions(&self.g, self.var())?;
        let mut out: Vec<(ChartPoint, usize)> =
            pf.poles().into_iter().map(|(p, k)| (ChartPoint::new(self.chart, Point::Finite(p)), k)).collect();
        let inf = ChartPoint::new(self.chart, Point::Infinity);
        let (v, _) = self.local_expansion(&inf, 1)?;
        if v < 0 {
            out.push((inf, (-v) as usize));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> DifferentialJson {
        DifferentialJson { chart: self.chart, expr: self.g.to_string() }
    }
}

/// `{chart, expr}` where `expr` is the coefficient of `d(chart var)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentialJson {
    #[serde(default)]
    pub chart: Chart,
    pub expr: String,
}

impl TryFrom<&DifferentialJson> for Differential {
    type Error = Error;

    fn try_from(j: &DifferentialJson) -> Result<Self> {
        Differential::parse(j.chart, &j.expr)
    }
}

impl fmt::Display for Differential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) d{}", self.g, self.var())
    }
}

impl fmt::Debug for Differential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Differential({self})")
    }
}

/// Renames `from` to `to` in a rational function whose context contains both.
pub(crate) fn rename_var(f: &RationalFunction, from: &str, to: &str) -> RationalFunction {
    if from == to {
        return f.clone();
    }
    let ren = |p: &Poly| -> Poly {
        let vars = p.vars().clone();
        let target = Poly::var(vars.clone(), to).unwrap();
        p.substitute(&[(from, target)]).with_vars(&vars).unwrap()
    };
    RationalFunction::from_coprime(ren(f.num()), ren(f.den()))
}

trait TrimTo {
    fn trimmed_to(&self, keep: &str) -> RationalFunction;
}

impl TrimTo for RationalFunction {
    /// Drops unused variables, always keeping `keep` first.
    fn trimmed_to(&self, keep: &str) -> RationalFunction {
        let mut names = vec![keep.to_string()];
        for v in self.used_vars() {
            if v != keep {
                names.push(v);
            }
        }
        self.with_vars(&names.into()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_transport_round_trip() {
        let w = Differential::parse(Chart::U, "-12*u^2/(u-1)^4").unwrap();
        let z = w.to_chart(Chart::Z);
        assert_eq!(z, Differential::parse(Chart::Z, "12/(z-1)^4").unwrap());
        assert_eq!(z.to_chart(Chart::U), w);
    }

    #[test]
    fn node_differential_charts() {
        let z = Differential::parse(Chart::Z, "-(1/(z-2) - 1/(z-3))").unwrap();
        assert_eq!(z.to_chart(Chart::U), Differential::parse(Chart::U, "(2-3)/((1-2*u)*(1-3*u))").unwrap());
    }

    #[test]
    fn residues_and_poles() {
        let w = Differential::parse(Chart::U, "4/(u-1)^2").unwrap();
        let p = ChartPoint::new(Chart::Z, Point::Finite(Scalar::one()));
        assert!(w.residue(&p).unwrap().is_zero());
        let poles = w.poles().unwrap();
        assert_eq!(poles.len(), 1);
        assert!(poles[0].0.same_point(&p));
        assert_eq!(poles[0].1, 2);
        let dv = Differential::parse(Chart::Z, "z^6").unwrap();
        let inf = ChartPoint::new(Chart::Z, Point::Infinity);
        assert_eq!(dv.poles().unwrap(), vec![(inf.clone(), 8)]);
        // Res_{w=0} w^7 · (-w^{-8} dw) = -1
        assert_eq!(dv.residue_with_monomial(&inf, 7).unwrap(), Scalar::from_int(-1));
    }
}
