//! Exact calculus for unramified Arthur and Langlands parameters of split
//! reductive groups.
//!
//! An Arthur parameter is modelled by the Frobenius eigen-data of its
//! tempered part together with the weighted Dynkin diagram and contributing
//! roots of its `SL2`-component. From it the crate computes the associated
//! Langlands parameter, the standard-module data of its L-packet, the
//! adjoint local L-factors, and a certificate deciding whether the packet is
//! tempered.

pub mod classifier;
pub mod error;
pub mod lfactors;
mod linalg;
pub mod monomial;
pub mod nilpotent;
pub mod parameters;
pub mod root_datum;

pub use error::{Error, Result};
pub use monomial::QMonomial;

/// Exact rational numbers.
pub type Rational = num_rational::Ratio<i64>;
