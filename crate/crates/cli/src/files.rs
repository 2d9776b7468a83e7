use std::path::Path;

use serde::{Deserialize, Serialize};

use cusplump::algebra::{Poly, RationalFunction, Scalar};
use cusplump::curves::{
    basis_from_override, bicuspidal_override, curve_differential_basis, BasisJson, CurveBasis, CurveSpec, Differential,
    DifferentialJson,
};
use cusplump::groebner::Stats;
use cusplump::tau::{FrameRows, SosCertificate};
use cusplump::theta::{MembershipReport, Strategy};

use crate::error::{CliError, Result};

/// Built-in names accepted wherever a curve file is expected.
pub const BUILTIN_CURVES: [&str; 3] = ["bicuspidal", "monomial456", "bicuspidal-a6"];

pub fn builtin_curve(name: &str) -> Option<CurveSpec> {
    match name {
        "bicuspidal" => Some(CurveSpec::bicuspidal()),
        "monomial456" => Some(CurveSpec::monomial_456()),
        "bicuspidal-a6" => Some(CurveSpec::bicuspidal_a_even(3)),
        _ => None,
    }
}

/// A path, or `builtin:<name>`.
pub fn load_curve(arg: &str) -> Result<CurveSpec> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin_curve(name)
            .ok_or_else(|| cusplump::Error::InvalidCurve(format!("unknown built-in curve '{name}'")).into());
    }
    Ok(CurveSpec::from_json(&std::fs::read_to_string(arg)?)?)
}

/// Any JSON object with a `differentials` list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiffsFile {
    pub differentials: Vec<DifferentialJson>,
}

/// A path to a differentials file, or `builtin:bicuspidal`.
pub fn load_basis(arg: Option<&str>, c: &CurveSpec) -> Result<CurveBasis> {
    let diffs: Vec<Differential> = match arg {
        None => return Ok(curve_differential_basis(c)?),
        Some("builtin:bicuspidal") => bicuspidal_override(),
        Some(path) => {
            let f: DiffsFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            f.differentials.iter().map(Differential::try_from).collect::<cusplump::Result<_>>()?
        }
    };
    Ok(basis_from_override(c, &diffs)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThetaFile {
    pub curve: CurveSpec,
    pub basis: BasisJson,
    pub strategy: Strategy,
    pub theta: Poly,
    pub text: String,
    pub degree: u32,
    pub leading: String,
    pub membership: MembershipReport,
    pub checks: Vec<CheckLine>,
    pub stats: Stats,
}

impl ThetaFile {
    pub fn basis(&self) -> Result<CurveBasis> {
        let diffs = self.basis.differentials.iter().map(Differential::try_from).collect::<cusplump::Result<Vec<_>>>()?;
        Ok(basis_from_override(&self.curve, &diffs)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: &str, outcome: std::result::Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => CheckLine { name: name.into(), passed: true, detail },
            Err(detail) => CheckLine { name: name.into(), passed: false, detail },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TauFile {
    pub phases: Vec<Scalar>,
    pub constraints: Vec<String>,
    pub rows: FrameRows,
    pub tau: Poly,
    pub text: String,
    pub u: RationalFunction,
    pub certificate: Option<SosCertificate>,
    pub certificate_error: Option<String>,
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let text = std::fs::read_to_string(path.as_ref())?;
    serde_json::from_str(&text).map_err(CliError::from)
}

pub fn write_json_file<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let f = std::fs::File::create(path.as_ref())?;
    crate::emit::write_json(std::io::BufWriter::new(f), value)
}
