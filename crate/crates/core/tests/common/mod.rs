#![allow(dead_code)]

use std::sync::Arc;

use arthur_core::nilpotent::{sl2_data_from_partition, valid_partitions};
use arthur_core::parameters::{ArthurParameter, UnramifiedParameter};
use arthur_core::root_datum::{CartanSpec, Family, RootDatum};
use arthur_core::{Error, Rational};

/// Dual types exercised by the exhaustive checks.
pub const CENSUS_TYPES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::C, 2),
    (Family::B, 2),
    (Family::C, 3),
    (Family::D, 4),
];

pub fn census_angles() -> Vec<Rational> {
    vec![
        Rational::new(0, 1),
        Rational::new(1, 2),
        Rational::new(1, 4),
        Rational::new(3, 4),
    ]
}

pub fn datum(family: Family, rank: usize) -> Arc<RootDatum> {
    Arc::new(RootDatum::new(CartanSpec::new(family, rank).unwrap()))
}

/// Every tuple in `values^len`.
pub fn tuples<T: Clone>(values: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// All unit assignments for the dual type.
pub fn unit_parameters(family: Family, rank: usize) -> Vec<UnramifiedParameter> {
    let d = datum(family, rank);
    tuples(&census_angles(), rank)
        .into_iter()
        .map(|angles| UnramifiedParameter::from_unit_angles(d.clone(), &angles).unwrap())
        .collect()
}

/// All Arthur parameters over the dual type built from valid partitions and
/// unit assignments passing the centralizer condition.
pub fn arthur_census(family: Family, rank: usize) -> Vec<ArthurParameter> {
    let mut out = Vec::new();
    for p in valid_partitions(family, rank).unwrap() {
        let rho = sl2_data_from_partition(family, rank, &p).unwrap();
        for phi in unit_parameters(family, rank) {
            match ArthurParameter::new(phi, rho.clone()) {
                Ok(psi) => out.push(psi),
                Err(Error::Centralizer { .. }) => {}
                Err(e) => panic!("unexpected error building census: {e}"),
            }
        }
    }
    out
}

pub fn full_census() -> Vec<ArthurParameter> {
    CENSUS_TYPES
        .iter()
        .flat_map(|&(f, n)| arthur_census(f, n))
        .collect()
}
