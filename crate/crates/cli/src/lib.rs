//! Scenario ingestion, per-scenario reports, family aggregation and orbit
//! listings on top of `arthur-core`.

pub mod error;
pub mod global;
pub mod orbits;
pub mod report;
pub mod scenario;

pub use error::{CliError, CliResult};
pub use report::Format;

use std::path::Path;

/// Loads, validates and reports on one scenario file.
pub fn check_file(path: &Path, format: Format, certify: bool) -> CliResult<String> {
    let scenario = scenario::load_scenario(path)?;
    let checked = scenario.validate().map_err(|e| match e {
        CliError::Validation { path: p, message } => {
            CliError::validation(format!("{}: {p}", path.display()), message)
        }
        other => other,
    })?;
    let r = report::build_report(&checked, certify)?;
    Ok(report::render(&r, format))
}
