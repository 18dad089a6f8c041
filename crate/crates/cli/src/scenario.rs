//! Scenario files: a group `G`, unit data for the dual torus and an `SL2`
//! component, in TOML.

use std::path::Path;
use std::sync::Arc;

use arthur_core::monomial::parse_ratio;
use arthur_core::nilpotent::{is_very_even, sl2_data_from_partition, Partition, SL2Data};
use arthur_core::parameters::{ArthurParameter, UnramifiedParameter};
use arthur_core::root_datum::{CartanSpec, Root, RootDatum};
use arthur_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub label: String,
    /// Cartan type of `G`; the parameters live on its dual.
    pub group: String,
    /// One angle `k/m` per simple root; `ζ = e^{2πi k/m}`.
    pub phi_units: Vec<String>,
    #[serde(default = "trivial_rho")]
    pub rho: RhoSpec,
    #[serde(default = "yes")]
    pub generic_assumption: bool,
}

fn trivial_rho() -> RhoSpec {
    RhoSpec::Named("trivial".into())
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RhoSpec {
    Named(String),
    Partition { partition: Vec<usize> },
    Expert { expert: ExpertRho },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpertRho {
    pub h: Vec<i64>,
    /// Contributing roots as coefficient vectors in the dual simple roots.
    pub s: Vec<Vec<i32>>,
}

/// A scenario after validation.
#[derive(Debug, Clone)]
pub struct Checked {
    pub scenario: Scenario,
    pub group: CartanSpec,
    pub datum: Arc<RootDatum>,
    pub psi: ArthurParameter,
    pub partition: Option<Partition>,
    pub very_even: bool,
}

pub fn parse_scenario(text: &str) -> CliResult<Scenario> {
    toml::from_str(text).map_err(|e| CliError::validation("scenario", e.message()))
}

pub fn load_scenario(path: &Path) -> CliResult<Scenario> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_scenario(&text).map_err(|e| match e {
        CliError::Validation { path: p, message } => CliError::validation(format!("{}: {p}", path.display()), message),
        other => other,
    })
}

pub fn parse_angle(path: &str, s: &str) -> CliResult<Rational> {
    let a = parse_ratio(s).ok_or_else(|| CliError::validation(path, format!("cannot parse {s:?} as k/m")))?;
    if a < Rational::from_integer(0) || a >= Rational::from_integer(1) {
        return Err(CliError::validation(path, format!("angle {s} outside [0, 1)")));
    }
    Ok(a)
}

impl Scenario {
    pub fn validate(&self) -> CliResult<Checked> {
        let group: CartanSpec = self.group.parse().map_err(|e| CliError::from_core("group", e))?;
        let dual = group.dual();
        let datum = Arc::new(RootDatum::new(dual));
        let n = dual.rank();
        if self.phi_units.len() != n {
            return Err(CliError::validation(
                "phi_units",
                format!("expected {n} angles for {group}, found {}", self.phi_units.len()),
            ));
        }
        let angles = self
            .phi_units
            .iter()
            .enumerate()
            .map(|(i, s)| parse_angle(&format!("phi_units[{i}]"), s))
            .collect::<CliResult<Vec<_>>>()?;
        let phi = UnramifiedParameter::from_unit_angles(datum.clone(), &angles)
            .map_err(|e| CliError::from_core("phi_units", e))?;

        let (rho, partition) = match &self.rho {
            RhoSpec::Named(name) if name == "trivial" => (SL2Data::trivial(n), None),
            RhoSpec::Named(name) => {
                return Err(CliError::validation(
                    "rho",
                    format!("unknown value {name:?}; use \"trivial\", a partition or an expert table"),
                ))
            }
            RhoSpec::Partition { partition } => {
                let p = Partition::new(partition.clone()).map_err(|e| CliError::from_core("rho.partition", e))?;
                let rho = sl2_data_from_partition(dual.family(), n, &p)
                    .map_err(|e| CliError::from_core("rho.partition", e))?;
                (rho, Some(p))
            }
            RhoSpec::Expert { expert } => {
                let mut roots = Vec::new();
                for (i, c) in expert.s.iter().enumerate() {
                    let r = Root::new(c.clone())
                        .ok_or_else(|| CliError::validation(format!("rho.expert.s[{i}]"), "zero vector"))?;
                    roots.push(r);
                }
                let rho = SL2Data::new(&datum, &expert.h, roots).map_err(|e| CliError::from_core("rho.expert", e))?;
                (rho, None)
            }
        };
        let psi = ArthurParameter::new(phi, rho).map_err(|e| CliError::from_core("scenario", e))?;
        let very_even = partition
            .as_ref()
            .is_some_and(|p| is_very_even(dual.family(), p));
        Ok(Checked {
            scenario: self.clone(),
            group,
            datum,
            psi,
            partition,
            very_even,
        })
    }
}
