//! Three operations for the demo page. Each returns a string (JSON or text);
//! the `*_impl` functions carry the logic so they can be tested natively.

use std::sync::Arc;

use arthur_cli::orbits::list_orbits;
use arthur_cli::report::{build_report, render, to_machine, Format};
use arthur_cli::scenario::{parse_angle, parse_scenario};
use arthur_core::classifier::{irreducibility_verdict, StandardModuleDatum, TemperedDatum};
use arthur_core::monomial::fmt_ratio;
use arthur_core::parameters::UnramifiedParameter;
use arthur_core::root_datum::{CartanSpec, LeviSubset, RootDatum};
use arthur_core::Rational;
use serde::Serialize;
use wasm_bindgen::prelude::*;

pub const MAX_SCAN_STEPS: i64 = 64;

pub fn orbits_impl(family: &str, rank: usize) -> Result<String, String> {
    list_orbits(family, rank).map(|o| to_machine(&o)).map_err(|e| e.to_string())
}

pub fn classify_impl(scenario: &str, format: &str, certify: bool) -> Result<String, String> {
    let format = match format {
        "text" => Format::Text,
        "machine" => Format::Machine,
        other => return Err(format!("unknown format {other:?}")),
    };
    let checked = parse_scenario(scenario)
        .and_then(|s| s.validate())
        .map_err(|e| e.to_string())?;
    let r = build_report(&checked, certify).map_err(|e| e.to_string())?;
    Ok(render(&r, format))
}

#[derive(Debug, Serialize)]
pub struct ScanPoint {
    pub nu: String,
    pub irreducible: bool,
    pub vanishing: Vec<String>,
}

/// Irreducibility of `I(ν, τ)` on `PGL2` for `ν = k/steps`, `k = 1..=2·steps`,
/// with `τ` the unramified character of the given unit angle.
pub fn scan_impl(unit: &str, steps: i64) -> Result<Vec<ScanPoint>, String> {
    if !(1..=MAX_SCAN_STEPS).contains(&steps) {
        return Err(format!("steps must be in 1..={MAX_SCAN_STEPS}"));
    }
    let angle = parse_angle("unit", unit).map_err(|e| e.to_string())?;
    let d = Arc::new(RootDatum::new(CartanSpec::new(arthur_core::root_datum::Family::A, 1).map_err(|e| e.to_string())?));
    let units = UnramifiedParameter::from_unit_angles(d, &[angle]).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for k in 1..=2 * steps {
        let nu = Rational::new(k, steps);
        let tau = TemperedDatum::new(LeviSubset::empty(1), units.clone(), true).map_err(|e| e.to_string())?;
        let sm = StandardModuleDatum::from_root_coordinates(tau, &[nu]).map_err(|e| e.to_string())?;
        let v = irreducibility_verdict(&sm).map_err(|e| e.to_string())?;
        out.push(ScanPoint {
            nu: fmt_ratio(&nu),
            irreducible: v.irreducible,
            vanishing: v.witnesses.iter().map(|f| f.eigenvalue.to_string()).collect(),
        });
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn orbits(family: &str, rank: u32) -> Result<String, JsError> {
    orbits_impl(family, rank as usize).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn classify(scenario: &str, format: &str, certify: bool) -> Result<String, JsError> {
    classify_impl(scenario, format, certify).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn reducibility_scan(unit: &str, steps: u32) -> Result<String, JsError> {
    scan_impl(unit, i64::from(steps))
        .map(|v| to_machine(&v))
        .map_err(|e| JsError::new(&e))
}
