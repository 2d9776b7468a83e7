use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::RationalFunction;
use super::scalar::{rational_from_str, rational_to_string, Scalar};
use crate::error::Error;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub re: String,
    pub im: String,
}

/// `{vars, terms: [{exps, re, im}]}` with terms in descending grevlex order.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exps: m.exps().to_vec(),
                    re: rational_to_string(c.re()),
                    im: rational_to_string(c.im()),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Poly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Poly, Error> {
        let vars: Arc<[String]> = j.vars.into();
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.exps.len() != vars.len() {
                return Err(Error::Parse(format!("term has {} exponents for {} variables", t.exps.len(), vars.len())));
            }
            terms.push((t.exps, Scalar::new(rational_from_str(&t.re)?, rational_from_str(&t.im)?)));
        }
        Ok(Poly::from_terms(vars, terms))
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RationalJson {
    pub num: PolyJson,
    pub den: PolyJson,
    pub text: String,
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalJson { num: self.num().into(), den: self.den().into(), text: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RationalJson::deserialize(d)?;
        let num = Poly::try_from(j.num).map_err(serde::de::Error::custom)?;
        let den = Poly::try_from(j.den).map_err(serde::de::Error::custom)?;
        RationalFunction::new(num, den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    #[test]
    fn json_round_trip() {
        let p = parse_poly("(1/2+3*i)*x^2*y - 7*y + 1", &["x", "y"]).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        let j: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(j["terms"][0]["exps"], serde_json::json!([2, 1]));
        assert_eq!(j["terms"][0]["im"], "3");
    }
}
