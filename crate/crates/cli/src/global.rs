//! Aggregation of packet verdicts over a family of unramified places.

use std::fmt::Write as _;
use std::path::Path;

use arthur_core::classifier::{classify_packet, VerdictKind};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::scenario::Scenario;

pub const GENERIC_ALMOST_EVERYWHERE: &str = "generic-almost-everywhere";
pub const TEMPERED_EVERYWHERE: &str = "tempered-everywhere";

/// Standing assumptions a family may invoke, with a one-line statement.
pub const ASSUMPTIONS: &[(&str, &str)] = &[
    (
        GENERIC_ALMOST_EVERYWHERE,
        "a globally generic cuspidal representation has generic local components at almost every place",
    ),
    (
        TEMPERED_EVERYWHERE,
        "a generic cuspidal representation tempered at almost every place is tempered at every place",
    ),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceFamily {
    #[serde(default)]
    pub assumptions: Vec<String>,
    #[serde(default)]
    pub places: Vec<Place>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Place {
    pub label: String,
    pub scenario: Scenario,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceVerdict {
    pub label: String,
    pub verdict: String,
    pub generic_assumption: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub id: String,
    pub statement: String,
    pub invoked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalReport {
    /// `theorem` when every place assumes genericity, else `descriptive`.
    pub mode: String,
    pub places: Vec<PlaceVerdict>,
    pub non_tempered: Vec<String>,
    pub conclusion: String,
    pub assumptions: Vec<Assumption>,
}

pub fn parse_family(text: &str) -> CliResult<PlaceFamily> {
    toml::from_str(text).map_err(|e| CliError::validation("family", e.message()))
}

pub fn load_family(path: &Path) -> CliResult<PlaceFamily> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_family(&text)
}

fn prefix(e: CliError, at: &str) -> CliError {
    match e {
        CliError::Validation { path, message } => CliError::validation(format!("{at}.{path}"), message),
        other => other,
    }
}

pub fn ramanujan_report(f: &PlaceFamily) -> CliResult<GlobalReport> {
    if f.places.is_empty() {
        return Err(CliError::validation("places", "family has no places"));
    }
    for (i, a) in f.assumptions.iter().enumerate() {
        if !ASSUMPTIONS.iter().any(|(id, _)| id == a) {
            let known: Vec<&str> = ASSUMPTIONS.iter().map(|(id, _)| *id).collect();
            return Err(CliError::validation(
                format!("assumptions[{i}]"),
                format!("unknown assumption {a:?}; known: {}", known.join(", ")),
            ));
        }
    }
    let mut places = Vec::new();
    for (i, place) in f.places.iter().enumerate() {
        let at = format!("places[{i}].scenario");
        let checked = place.scenario.validate().map_err(|e| prefix(e, &at))?;
        let v = classify_packet(&checked.psi).map_err(|e| CliError::from_core(at, e))?;
        places.push(PlaceVerdict {
            label: place.label.clone(),
            verdict: match v.kind {
                VerdictKind::Tempered => "tempered",
                VerdictKind::NonTempered => "non-tempered",
            }
            .into(),
            generic_assumption: place.scenario.generic_assumption,
            witness: v.witness.map(|w| w.to_string()),
        });
    }
    let non_tempered: Vec<String> = places
        .iter()
        .filter(|p| p.verdict == "non-tempered")
        .map(|p| p.label.clone())
        .collect();
    let not_generic: Vec<String> = places
        .iter()
        .filter(|p| !p.generic_assumption)
        .map(|p| p.label.clone())
        .collect();
    let has = |id: &str| f.assumptions.iter().any(|a| a == id);

    let mut invoked = Vec::new();
    let (mode, conclusion) = if !not_generic.is_empty() {
        let mut c = format!(
            "descriptive only: genericity is not assumed at {}; no global statement is made",
            not_generic.join(", ")
        );
        if !non_tempered.is_empty() {
            let _ = write!(c, "; non-tempered at {}", non_tempered.join(", "));
        }
        ("descriptive", c)
    } else if non_tempered.is_empty() {
        let mut c = String::from("tempered at all listed places");
        if has(TEMPERED_EVERYWHERE) {
            invoked.push(TEMPERED_EVERYWHERE);
            let _ = write!(c, "; under {TEMPERED_EVERYWHERE}, tempered everywhere");
        }
        ("theorem", c)
    } else {
        let mut c = format!(
            "non-tempered at {}: no generic member exists there, contradicting local genericity",
            non_tempered.join(", ")
        );
        if has(GENERIC_ALMOST_EVERYWHERE) {
            invoked.push(GENERIC_ALMOST_EVERYWHERE);
            let _ = write!(
                c,
                "; under {GENERIC_ALMOST_EVERYWHERE}, the family cannot come from a locally generic cuspidal representation"
            );
        }
        ("theorem", c)
    };
    let assumptions = f
        .assumptions
        .iter()
        .map(|a| Assumption {
            id: a.clone(),
            statement: ASSUMPTIONS.iter().find(|(id, _)| id == a).map(|x| x.1).unwrap_or_default().into(),
            invoked: invoked.contains(&a.as_str()),
        })
        .collect();
    Ok(GlobalReport {
        mode: mode.into(),
        places,
        non_tempered,
        conclusion,
        assumptions,
    })
}

pub fn global_text(g: &GlobalReport) -> String {
    let mut s = format!("family ({} mode)\n", g.mode);
    for p in &g.places {
        let _ = write!(s, "  {:<16} {}", p.label, p.verdict);
        if let Some(w) = &p.witness {
            let _ = write!(s, " (witness {w})");
        }
        if !p.generic_assumption {
            s.push_str(" [genericity not assumed]");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "conclusion: {}", g.conclusion);
    for a in &g.assumptions {
        let mark = if a.invoked { "invoked" } else { "listed" };
        let _ = writeln!(s, "assumption {} ({mark}): {}", a.id, a.statement);
    }
    s
}
