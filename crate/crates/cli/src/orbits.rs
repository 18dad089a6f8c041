use std::fmt::Write as _;

use arthur_core::nilpotent::{is_very_even, sl2_data_from_partition, valid_partitions};
use arthur_core::root_datum::CartanSpec;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub partition: Vec<usize>,
    pub diagram: Vec<i64>,
    pub s: Vec<String>,
    pub very_even: bool,
}

/// Unipotent classes of the given (dual) type with their weighted diagrams.
pub fn list_orbits(family: &str, rank: usize) -> CliResult<Vec<Orbit>> {
    let spec: CartanSpec = format!("{family}{rank}")
        .parse()
        .map_err(|e| CliError::from_core("family", e))?;
    let (f, n) = (spec.family(), spec.rank());
    let mut out = Vec::new();
    for p in valid_partitions(f, n).map_err(|e| CliError::from_core("family", e))? {
        let data = sl2_data_from_partition(f, n, &p).map_err(|e| CliError::from_core("partition", e))?;
        out.push(Orbit {
            partition: p.parts().to_vec(),
            diagram: data.h().values(),
            s: data.s().iter().map(|r| r.to_string()).collect(),
            very_even: is_very_even(f, &p),
        });
    }
    Ok(out)
}

pub fn orbits_text(orbits: &[Orbit]) -> String {
    let mut s = String::new();
    for o in orbits {
        let p: Vec<String> = o.partition.iter().map(|x| x.to_string()).collect();
        let d: Vec<String> = o.diagram.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, "[{}]", p.join(","));
        let _ = write!(s, "{:>w$}({})  S = {{{}}}", "", d.join(","), o.s.join(", "), w = 16usize.saturating_sub(p.join(",").len() + 2));
        if o.very_even {
            s.push_str("  very even");
        }
        s.push('\n');
    }
    s
}
