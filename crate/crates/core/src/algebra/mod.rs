//! Exact arithmetic over Q(i): scalars, sparse polynomials, rational
//! functions, series, partial fractions.

pub mod gcd;
mod json;
pub mod parse;
pub mod partial;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod upoly;

use std::fmt;
use std::str::FromStr;

pub use json::{PolyJson, RationalJson};
pub use parse::{parse_poly, parse_poly_auto, parse_rational};
pub use partial::{integrate_log_free, partial_fractions, PartialFractions, PoleTerm};
pub use poly::{Monomial, Poly};
pub use rational::RationalFunction;
pub use scalar::Scalar;
pub use series::{laurent_expand, parametric_laurent, series_expand, TruncatedSeries};
pub use upoly::UPoly;

use crate::error::Error;

/// A point of the projective line in some affine coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Scalar),
    Infinity,
}

impl Point {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Point::Finite(s) => Some(s),
            Point::Infinity => None,
        }
    }

    /// The same point in the coordinate `1/z`.
    pub fn inverted(&self) -> Point {
        match self {
            Point::Infinity => Point::Finite(Scalar::from_int(0)),
            Point::Finite(s) => match s.inv() {
                Some(v) => Point::Finite(v),
                None => Point::Infinity,
            },
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(s) => write!(f, "{s}"),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            other => Ok(Point::Finite(other.parse()?)),
        }
    }
}

impl serde::Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
