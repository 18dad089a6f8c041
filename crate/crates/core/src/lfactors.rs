//! Adjoint local L-factors on the unipotent radical of a standard parabolic.
//!
//! For a Levi given by `theta`, the dual nilradical decomposes into graded
//! pieces `r_1, r_2, ...` where the level of a root is the sum of its
//! coefficients on simple roots outside `theta`. Every factor is an Euler
//! product `L(s)^{-1} = Π (1 - λ q^{-s})` over one Frobenius eigenvalue `λ`
//! per root.
//!
//! Orientation convention: `r̃` uses `λ = β(φ)` on positive nilradical roots
//! `β`, and `r` uses `λ = β(φ)^{-1}`. With this choice the rank-one
//! standard module with evaluation `q^1` on the root is the reducible
//! (Steinberg) point, and the Arthur point `β(H) = 2` gives `λ = q` for `r̃`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::parameters::UnramifiedParameter;
use crate::root_datum::{LeviSubset, Root, RootDatum};
use crate::{QMonomial, Rational};

/// The nilradical roots of `theta`, grouped by level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedNilradical {
    theta: LeviSubset,
    levels: BTreeMap<u32, Vec<Root>>,
}

impl GradedNilradical {
    pub fn theta(&self) -> &LeviSubset {
        &self.theta
    }

    pub fn levels(&self) -> &BTreeMap<u32, Vec<Root>> {
        &self.levels
    }

    pub fn level(&self, i: u32) -> &[Root] {
        self.levels.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `(level, root)` in level order, then enumeration order.
    pub fn roots(&self) -> impl Iterator<Item = (u32, &Root)> {
        self.levels
            .iter()
            .flat_map(|(&l, roots)| roots.iter().map(move |r| (l, r)))
    }

    pub fn len(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }
}

pub fn grade_nilradical(d: &RootDatum, theta: &LeviSubset) -> Result<GradedNilradical> {
    let (_, nilradical) = d.levi_and_nilradical(theta)?;
    let mut levels: BTreeMap<u32, Vec<Root>> = BTreeMap::new();
    for r in nilradical {
        let level: i32 = r
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(i, _)| !theta.contains(*i))
            .map(|(_, &c)| c)
            .sum();
        levels.entry(level as u32).or_default().push(r);
    }
    Ok(GradedNilradical {
        theta: theta.clone(),
        levels,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    R,
    RTilde,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::R => write!(f, "r"),
            Orientation::RTilde => write!(f, "r~"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub level: u32,
    pub root: Root,
    pub eigenvalue: QMonomial,
}

/// `L(s) = Π (1 - λ_i q^{-s})^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalLFactor {
    pub orientation: Orientation,
    pub factors: Vec<EulerFactor>,
}

impl LocalLFactor {
    pub fn eigenvalues(&self) -> Vec<QMonomial> {
        self.factors.iter().map(|f| f.eigenvalue).collect()
    }

    pub fn dimension(&self) -> usize {
        self.factors.len()
    }

    /// The sub-factor `L(s, r_i)`.
    pub fn at_level(&self, level: u32) -> LocalLFactor {
        LocalLFactor {
            orientation: self.orientation,
            factors: self.factors.iter().filter(|f| f.level == level).cloned().collect(),
        }
    }
}

pub fn l_factor(g: &GradedNilradical, p: &UnramifiedParameter, orientation: Orientation) -> Result<LocalLFactor> {
    p.datum().check_len("graded nilradical", g.theta.rank())?;
    let factors = g
        .roots()
        .map(|(level, root)| {
            let value = p.evaluate_root(root)?;
            let eigenvalue = match orientation {
                Orientation::RTilde => value,
                Orientation::R => value.inv(),
            };
            Ok(EulerFactor {
                level,
                root: root.clone(),
                eigenvalue,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalLFactor {
        orientation,
        factors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vanishing {
    pub vanishes: bool,
    /// Indices of the Euler factors that vanish.
    pub witnesses: Vec<usize>,
}

/// Whether `L(s)^{-1}` vanishes at the real point `s`.
pub fn inverse_vanishes_at(l: &LocalLFactor, s: Rational) -> Vanishing {
    let witnesses: Vec<usize> = l
        .factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.eigenvalue.euler_factor_vanishes_at(s))
        .map(|(i, _)| i)
        .collect();
    Vanishing {
        vanishes: !witnesses.is_empty(),
        witnesses,
    }
}

/// Real poles of `L(s)`, with multiplicity, ascending.
pub fn pole_locations(l: &LocalLFactor) -> Vec<Rational> {
    let mut poles: Vec<Rational> = l
        .factors
        .iter()
        .filter(|f| f.eigenvalue.has_trivial_unit())
        .map(|f| f.eigenvalue.exponent())
        .collect();
    poles.sort();
    poles
}

/// The zero/nonzero class of `L(0, r·φ)/L(1, r̃·φ)`, together with both
/// factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRatio {
    pub numerator: LocalLFactor,
    pub denominator: LocalLFactor,
    /// Euler factors of the denominator vanishing at `s = 1`.
    pub denominator_zeros: Vec<usize>,
}

impl CoefficientRatio {
    /// The inverse local coefficient vanishes, i.e. the standard module is
    /// reducible.
    pub fn is_zero(&self) -> bool {
        !self.denominator_zeros.is_empty()
    }
}

pub fn local_coefficient_ratio(d: &RootDatum, theta: &LeviSubset, p: &UnramifiedParameter) -> Result<CoefficientRatio> {
    let graded = grade_nilradical(d, theta)?;
    let exps = p.exponents();
    for (_, root) in graded.roots() {
        let pairing = root.pair_rational(exps.entries());
        if pairing <= Rational::zero() {
            return Err(Error::NotLanglandsSetting(format!(
                "exponent pairs to {pairing} with nilradical root {root}"
            )));
        }
    }
    let numerator = l_factor(&graded, p, Orientation::R)?;
    if inverse_vanishes_at(&numerator, Rational::zero()).vanishes {
        return Err(Error::InvariantViolation(
            "L(0, r) has a pole in the Langlands setting".into(),
        ));
    }
    let denominator = l_factor(&graded, p, Orientation::RTilde)?;
    let denominator_zeros = inverse_vanishes_at(&denominator, Rational::from_integer(1)).witnesses;
    Ok(CoefficientRatio {
        numerator,
        denominator,
        denominator_zeros,
    })
}
