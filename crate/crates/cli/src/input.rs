//! JSON system descriptions.

use std::path::Path;

use nbody_afm::model::{Kinematics, Masses, PotentialForm, PotentialTerm, QuantumNumbers, SystemSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KinematicsDto {
    Nonrelativistic,
    Semirelativistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum TermDto {
    Power { coefficient: f64, exponent: f64 },
    Gaussian { depth: f64, range: f64 },
}

impl From<TermDto> for PotentialForm {
    fn from(t: TermDto) -> Self {
        match t {
            TermDto::Power { coefficient, exponent } => PotentialForm::power(coefficient, exponent),
            TermDto::Gaussian { depth, range } => PotentialForm::gaussian(depth, range),
        }
    }
}

/// On-disk form of a system and the state asked about.
///
/// `k` and `kbar` give per-particle and per-pair spring constants; only the
/// `ho` command reads them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub masses: Option<Vec<f64>>,
    pub kinematics: KinematicsDto,
    #[serde(default)]
    pub one_body: Vec<TermDto>,
    #[serde(default)]
    pub pairwise: Vec<TermDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<Vec<(u32, u32)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kbar: Option<Vec<Vec<f64>>>,
}

/// A parsed spec file, not yet validated against the library rules.
#[derive(Debug, Clone, PartialEq)]
pub struct Loaded {
    pub spec: SystemSpec,
    pub q: QuantumNumbers,
    pub springs: Option<(Vec<f64>, Vec<Vec<f64>>)>,
}

impl SpecFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed spec: {e}")))
    }

    pub fn load(self) -> Result<Loaded, CliError> {
        let masses = match (self.mass, self.masses) {
            (Some(m), None) => Masses::Identical(m),
            (None, Some(ms)) => Masses::PerParticle(ms),
            _ => return Err(CliError::Input("give exactly one of \"mass\" and \"masses\"".into())),
        };
        let kinematics = match self.kinematics {
            KinematicsDto::Nonrelativistic => Kinematics::Nonrelativistic,
            KinematicsDto::Semirelativistic => Kinematics::Semirelativistic,
        };
        let spec = SystemSpec {
            n: self.n,
            masses,
            kinematics,
            one_body: self.one_body.into_iter().map(|t| PotentialTerm::one_body(t.into())).collect(),
            pairwise: self.pairwise.into_iter().map(|t| PotentialTerm::pairwise(t.into())).collect(),
        };
        let q = match self.modes {
            Some(modes) => QuantumNumbers::new(modes),
            None => QuantumNumbers::ground(self.n),
        };
        let springs = match (self.k, self.kbar) {
            (None, None) => None,
            (Some(k), Some(kbar)) => Some((k, kbar)),
            (Some(k), None) => Some((k, vec![vec![0.0; self.n]; self.n])),
            (None, Some(kbar)) => Some((vec![0.0; self.n], kbar)),
        };
        Ok(Loaded { spec, q, springs })
    }
}
