//! Standard-module data of `Π(φ_ψ)`, irreducibility and genericity
//! verdicts, and the temperedness certificate for Arthur packets.
//!
//! If `ρ ≠ 1`, some positive root `β` with `β(H) = 2` carries the nilpositive
//! element and is fixed by `φ`. After moving the exponents of `φ_ψ` into the
//! dominant chamber, `β` lies in the nilradical of the defining Levi and
//! `β(φ_ψ) = q`. The `r̃` Euler factor at `β` then vanishes at `s = 1`, so the
//! standard module is reducible and its Langlands quotient is not generic.
//! Every verdict carries the data needed to re-check this with
//! [`crate::lfactors`] alone.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lfactors::{
    grade_nilradical, inverse_vanishes_at, l_factor, local_coefficient_ratio, CoefficientRatio, EulerFactor,
    LocalLFactor, Orientation,
};
use crate::parameters::{defining_levi, is_tempered, phi_psi, ArthurParameter, ExponentVector, UnramifiedParameter};
use crate::root_datum::{LeviSubset, Root, RootDatum};
use crate::{QMonomial, Rational};

/// Satake data of the tempered inducing representation `τ` of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemperedDatum {
    theta: LeviSubset,
    unit_parameter: UnramifiedParameter,
    generic: bool,
}

impl TemperedDatum {
    pub fn new(theta: LeviSubset, unit_parameter: UnramifiedParameter, generic: bool) -> Result<Self> {
        unit_parameter.datum().check_len("Levi subset", theta.rank())?;
        if let Some(i) = unit_parameter.coords().iter().position(|c| !c.exponent().is_zero()) {
            return Err(Error::NotTempered(i));
        }
        Ok(Self {
            theta,
            unit_parameter,
            generic,
        })
    }

    pub fn theta(&self) -> &LeviSubset {
        &self.theta
    }

    pub fn unit_parameter(&self) -> &UnramifiedParameter {
        &self.unit_parameter
    }

    /// Assumed, not computed.
    pub fn generic(&self) -> bool {
        self.generic
    }
}

/// `I(ν, τ)` in the Langlands setting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardModuleDatum {
    tau: TemperedDatum,
    nu: ExponentVector,
    weyl_word: Vec<usize>,
}

impl StandardModuleDatum {
    /// `nu` is given by its simple-root evaluations; it must vanish exactly
    /// on `theta` and be positive elsewhere.
    pub fn new(tau: TemperedDatum, nu: ExponentVector, weyl_word: Vec<usize>) -> Result<Self> {
        let d = tau.unit_parameter.datum().clone();
        d.check_len("nu", nu.entries().len())?;
        for (i, x) in nu.entries().iter().enumerate() {
            let in_levi = tau.theta.contains(i);
            if in_levi && !x.is_zero() {
                return Err(Error::NotLanglandsSetting(format!(
                    "nu has value {x} on Levi simple root a{}",
                    i + 1
                )));
            }
            if !in_levi && *x <= Rational::zero() {
                return Err(Error::NotLanglandsSetting(format!(
                    "nu has value {x} on simple root a{} outside the Levi",
                    i + 1
                )));
            }
        }
        Ok(Self { tau, nu, weyl_word })
    }

    /// Builds `ν` from its coordinates in the simple roots of `G` (the coroots
    /// of the dual datum), e.g. `ν = α/2` in rank one.
    pub fn from_root_coordinates(tau: TemperedDatum, coords: &[Rational]) -> Result<Self> {
        let evals = tau
            .unit_parameter
            .datum()
            .evaluations_from_coroot_coordinates(coords)?;
        Self::new(tau, ExponentVector(evals), Vec::new())
    }

    pub fn tau(&self) -> &TemperedDatum {
        &self.tau
    }

    pub fn theta(&self) -> &LeviSubset {
        &self.tau.theta
    }

    /// Simple-root evaluations of `ν`.
    pub fn nu(&self) -> &ExponentVector {
        &self.nu
    }

    /// `ν` in the simple roots of `G`.
    pub fn nu_root_coordinates(&self) -> Vec<Rational> {
        self.datum()
            .coroot_coordinates(self.nu.entries())
            .expect("length checked at construction")
    }

    pub fn weyl_word(&self) -> &[usize] {
        &self.weyl_word
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.tau.unit_parameter.datum()
    }

    /// `φ_ν = τ ⊗ q^ν`.
    pub fn langlands_parameter(&self) -> UnramifiedParameter {
        self.tau
            .unit_parameter
            .twist(&self.nu)
            .expect("length checked at construction")
    }
}

/// `φ_ψ` together with the roots carrying the nilpositive element, possibly
/// in a non-dominant Weyl chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub parameter: UnramifiedParameter,
    pub s: Vec<Root>,
}

impl EigenData {
    pub fn from_psi(psi: &ArthurParameter) -> Self {
        Self {
            parameter: phi_psi(psi),
            s: psi.rho().s().to_vec(),
        }
    }

    /// Applies a simple-reflection word to the parameter and to `S`.
    pub fn conjugate(&self, word: &[usize]) -> Self {
        let d = self.parameter.datum();
        Self {
            parameter: self.parameter.conjugate(word),
            s: self.s.iter().map(|r| d.apply_word_root(word, r)).collect(),
        }
    }

    /// Moves to the dominant chamber: exponents dominant, units and `S`
    /// transported by the same word.
    fn dominantize(&self) -> Result<Dominant> {
        let d = self.parameter.datum().clone();
        let (nu, word) = d.dominantize(self.parameter.exponents().entries())?;
        let units = UnramifiedParameter::from_unit_angles(d.clone(), &self.parameter.conjugate(&word).unit_angles())?;
        let mut s: Vec<Root> = self.s.iter().map(|r| d.apply_word_root(&word, r)).collect();
        s.sort_by(|a, b| a.enumeration_cmp(b));
        s.dedup();
        let nu = ExponentVector(nu);
        let theta = defining_levi(&nu, &d)?;
        Ok(Dominant {
            units,
            nu,
            word,
            s,
            theta,
        })
    }
}

struct Dominant {
    units: UnramifiedParameter,
    nu: ExponentVector,
    word: Vec<usize>,
    s: Vec<Root>,
    theta: LeviSubset,
}

impl Dominant {
    fn parameter(&self) -> UnramifiedParameter {
        self.units.twist(&self.nu).expect("same datum")
    }

    fn standard_module(&self, generic: bool) -> Result<StandardModuleDatum> {
        let tau = TemperedDatum::new(self.theta.clone(), self.units.clone(), generic)?;
        StandardModuleDatum::new(tau, self.nu.clone(), self.word.clone())
    }

    /// Roots of `S` with `β(H) = 2`, fixed by `φ₀`, outside the Levi.
    fn witness_candidates(&self) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for r in &self.s {
            let doubled = r.pair_rational(self.nu.entries()) * Rational::from_integer(2);
            if doubled != Rational::from_integer(2) {
                continue;
            }
            if !self.units.evaluate_root(r)?.is_one() {
                continue;
            }
            if r.supported_on(&self.theta) {
                continue;
            }
            out.push(r.clone());
        }
        Ok(out)
    }
}

/// Standard-module data of `Π(φ_ψ)`. `generic` is the assumption attached to
/// the tempered inducing data.
pub fn standard_module_datum(psi: &ArthurParameter, generic: bool) -> Result<StandardModuleDatum> {
    EigenData::from_psi(psi).dominantize()?.standard_module(generic)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    /// Euler factors of `L(s, r̃·φ_ν)` vanishing at `s = 1`.
    pub witnesses: Vec<EulerFactor>,
    pub ratio: CoefficientRatio,
}

/// `I(ν, τ)` is irreducible iff `L(1, r̃·φ_ν)^{-1} ≠ 0`.
pub fn irreducibility_verdict(sm: &StandardModuleDatum) -> Result<IrreducibilityVerdict> {
    let ratio = local_coefficient_ratio(sm.datum(), sm.theta(), &sm.langlands_parameter())?;
    let witnesses = ratio
        .denominator_zeros
        .iter()
        .map(|&i| ratio.denominator.factors[i].clone())
        .collect();
    Ok(IrreducibilityVerdict {
        irreducible: !ratio.is_zero(),
        witnesses,
        ratio,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenericityVerdict {
    Generic,
    NotGeneric,
    /// `τ` is not assumed generic; no conclusion in either direction.
    NotApplicable,
}

impl fmt::Display for GenericityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GenericityVerdict::Generic => "generic",
            GenericityVerdict::NotGeneric => "not-generic",
            GenericityVerdict::NotApplicable => "not-applicable",
        };
        write!(f, "{s}")
    }
}

/// For generic `τ`, `J(ν, τ)` is generic iff `I(ν, τ)` is irreducible.
pub fn genericity_verdict(sm: &StandardModuleDatum) -> Result<GenericityVerdict> {
    if !sm.tau.generic {
        return Ok(GenericityVerdict::NotApplicable);
    }
    Ok(if irreducibility_verdict(sm)?.irreducible {
        GenericityVerdict::Generic
    } else {
        GenericityVerdict::NotGeneric
    })
}

/// The minimal (in enumeration order) root of the dominantized `S` with
/// `β(H) = 2`, trivial `φ₀`-action and outside the Levi `theta`.
pub fn witness_root(psi: &ArthurParameter, theta: &LeviSubset) -> Result<Root> {
    if psi.rho().is_trivial() {
        return Err(Error::NoWitness);
    }
    let mut dom = EigenData::from_psi(psi).dominantize()?;
    dom.theta = theta.clone();
    dom.witness_candidates()?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvariantViolation("no contributing root outside the Levi".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Tempered,
    NonTempered,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::Tempered => write!(f, "Tempered"),
            VerdictKind::NonTempered => write!(f, "NonTempered"),
        }
    }
}

/// `L(s, r̃)^{-1}` vanishes at `s` through the Euler factor with this
/// eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VanishingCertificate {
    pub eigenvalue: QMonomial,
    pub s: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Root>,
    pub certificate: Option<VanishingCertificate>,
    pub levi: LeviSubset,
}

/// Everything computed for one Arthur parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketAnalysis {
    pub langlands: UnramifiedParameter,
    pub standard_module: StandardModuleDatum,
    /// `S` transported to the dominant chamber.
    pub dominant_s: Vec<Root>,
    pub verdict: PacketVerdict,
    pub irreducibility: IrreducibilityVerdict,
    pub genericity: GenericityVerdict,
    /// `L(s, r̃·φ_ψ)` over the nilradical of the defining Levi.
    pub r_tilde: LocalLFactor,
    /// `L(s, r·φ_ψ)` over the same roots.
    pub r: LocalLFactor,
}

fn classify_dominant(dom: &Dominant, expect_tempered: bool) -> Result<(PacketVerdict, LocalLFactor, LocalLFactor)> {
    let d = dom.units.datum().clone();
    let parameter = dom.parameter();
    let graded = grade_nilradical(&d, &dom.theta)?;
    let r_tilde = l_factor(&graded, &parameter, Orientation::RTilde)?;
    let r = l_factor(&graded, &parameter, Orientation::R)?;
    let one = Rational::one();
    let full = inverse_vanishes_at(&r_tilde, one).vanishes;

    if dom.nu.is_zero() {
        if !expect_tempered || !is_tempered(&parameter) {
            return Err(Error::InvariantViolation(
                "nontrivial SL2 component produced a tempered parameter".into(),
            ));
        }
        if full {
            return Err(Error::InvariantViolation(
                "tempered parameter has a vanishing L(1, r~)^-1".into(),
            ));
        }
        let verdict = PacketVerdict {
            kind: VerdictKind::Tempered,
            witness: None,
            certificate: None,
            levi: dom.theta.clone(),
        };
        return Ok((verdict, r_tilde, r));
    }
    if expect_tempered {
        return Err(Error::InvariantViolation(
            "trivial SL2 component produced a non-tempered parameter".into(),
        ));
    }

    let witness = dom
        .witness_candidates()?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvariantViolation("no contributing root outside the Levi".into()))?;
    let eigenvalue = parameter.evaluate_root(&witness)?;
    if eigenvalue != QMonomial::q_pow(one) {
        return Err(Error::InvariantViolation(format!(
            "witness {witness} has eigenvalue {eigenvalue}, expected q"
        )));
    }
    let by_witness = eigenvalue.euler_factor_vanishes_at(one);
    if by_witness != full {
        return Err(Error::InvariantViolation(
            "witness-based and full-product vanishing disagree".into(),
        ));
    }
    let verdict = PacketVerdict {
        kind: VerdictKind::NonTempered,
        witness: Some(witness),
        certificate: Some(VanishingCertificate { eigenvalue, s: one }),
        levi: dom.theta.clone(),
    };
    Ok((verdict, r_tilde, r))
}

/// Classifies eigen-data in any Weyl chamber.
pub fn classify_eigen_data(data: &EigenData) -> Result<PacketVerdict> {
    let dom = data.dominantize()?;
    Ok(classify_dominant(&dom, data.s.is_empty())?.0)
}

pub fn classify_packet(psi: &ArthurParameter) -> Result<PacketVerdict> {
    classify_eigen_data(&EigenData::from_psi(psi))
}

/// Runs every stage for `ψ`, with `generic` as the genericity assumption on
/// the tempered data.
pub fn analyze(psi: &ArthurParameter, generic: bool) -> Result<PacketAnalysis> {
    let data = EigenData::from_psi(psi);
    let dom = data.dominantize()?;
    let (verdict, r_tilde, r) = classify_dominant(&dom, psi.rho().is_trivial())?;
    let standard_module = dom.standard_module(generic)?;
    let irreducibility = irreducibility_verdict(&standard_module)?;
    if irreducibility.irreducible != (verdict.kind == VerdictKind::Tempered) {
        return Err(Error::InvariantViolation(
            "irreducibility disagrees with the packet verdict".into(),
        ));
    }
    let genericity = genericity_verdict(&standard_module)?;
    Ok(PacketAnalysis {
        langlands: data.parameter,
        standard_module,
        dominant_s: dom.s,
        verdict,
        irreducibility,
        genericity,
        r_tilde,
        r,
    })
}
