use thiserror::Error;

use crate::root_datum::{Family, Root};
use crate::QMonomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}: {reason}")]
    InvalidCartanSpec {
        family: Family,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse Cartan type {0:?} (expected e.g. A2, B3, D4, G2)")]
    CartanSyntax(String),
    #[error("{what}: expected length {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0} is not a root of this datum")]
    NotARoot(Root),
    #[error("{0} is not a positive root of this datum")]
    NotPositive(Root),
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector is not dominant: entry {index} is {value}")]
    NotDominant { index: usize, value: String },

    #[error("partitions are only modelled for classical families, not {0}")]
    NoPartitionModel(Family),
    #[error("partition must be nonempty with positive parts")]
    DegeneratePartition,
    #[error("partition of {found} does not fit {family}{rank} (needs a partition of {expected})")]
    PartitionTotal {
        family: Family,
        rank: usize,
        expected: usize,
        found: usize,
    },
    #[error("part {part} occurs {multiplicity} times; {family} requires {parity} parts to have even multiplicity")]
    PartitionParity {
        family: Family,
        part: usize,
        multiplicity: usize,
        parity: &'static str,
    },
    #[error("matrix oracle is limited to rank <= {max}, got {rank}")]
    DeskScale { rank: usize, max: usize },

    #[error("diagram entry {index} is {value}, must be 0, 1 or 2")]
    DiagramEntry { index: usize, value: i64 },
    #[error("root {root} pairs to {pairing} with H, must be 2")]
    Sl2Pairing { root: Root, pairing: i64 },
    #[error("H is nonzero but no contributing root was supplied")]
    Sl2MissingRoots,
    #[error("H is zero but contributing roots were supplied")]
    Sl2SpuriousRoots,

    #[error("phi is not bounded: coordinate {index} has exponent {exponent}")]
    Unbounded { index: usize, exponent: String },
    #[error("centralizer condition fails: {root} evaluates to {value} on phi, must be 1")]
    Centralizer { root: Root, value: QMonomial },
    #[error("not of Arthur type: exponent {index} is {value}, not half-integral")]
    NotHalfIntegral { index: usize, value: String },
    #[error("not of Arthur type: doubled dominant exponent {index} is {value}, outside {{0,1,2}}")]
    NotArthurType { index: usize, value: String },

    #[error("tempered datum has nonzero exponent at coordinate {0}")]
    NotTempered(usize),
    #[error("not in the Langlands setting: {0}")]
    NotLanglandsSetting(String),
    #[error("tempered parameter has no witness")]
    NoWitness,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Errors that signal a bug rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
