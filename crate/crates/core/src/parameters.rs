//! Unramified Langlands and Arthur parameters as exact Frobenius eigen-data.
//!
//! A parameter is recorded modulo the center of the dual group by the values
//! of the simple roots on the image of Frobenius. Units are roots of unity;
//! the `q`-exponents carry the non-tempered part.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::nilpotent::{validate_sl2_data, SL2Data, WeightedDynkinDiagram};
use crate::root_datum::{evaluate_root, LeviSubset, Root, RootDatum};
use crate::{QMonomial, Rational};

/// Rational exponents of the simple-root evaluations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<Rational>);

impl ExponentVector {
    pub fn zero(rank: usize) -> Self {
        ExponentVector(vec![Rational::zero(); rank])
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| *x >= Rational::zero())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Eigen-data of `φ(Frob)` modulo center: one value per simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnramifiedParameter {
    datum: Arc<RootDatum>,
    coords: Vec<QMonomial>,
}

impl UnramifiedParameter {
    pub fn new(datum: Arc<RootDatum>, coords: Vec<QMonomial>) -> Result<Self> {
        datum.check_len("parameter coordinates", coords.len())?;
        Ok(Self { datum, coords })
    }

    pub fn trivial(datum: Arc<RootDatum>) -> Self {
        let coords = vec![QMonomial::one(); datum.rank()];
        Self { datum, coords }
    }

    /// Tempered parameter with the given unit angles.
    pub fn from_unit_angles(datum: Arc<RootDatum>, angles: &[Rational]) -> Result<Self> {
        let coords = angles.iter().map(|&a| QMonomial::root_of_unity(a)).collect();
        Self::new(datum, coords)
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[QMonomial] {
        &self.coords
    }

    pub fn unit_angles(&self) -> Vec<Rational> {
        self.coords.iter().map(|c| c.unit()).collect()
    }

    pub fn exponents(&self) -> ExponentVector {
        ExponentVector(self.coords.iter().map(|c| c.exponent()).collect())
    }

    pub fn evaluate_root(&self, r: &Root) -> Result<QMonomial> {
        evaluate_root(r, &self.coords)
    }

    /// Twists by `q^{x_i}` coordinatewise.
    pub fn twist(&self, x: &ExponentVector) -> Result<Self> {
        self.datum.check_len("exponent vector", x.0.len())?;
        let coords = self
            .coords
            .iter()
            .zip(&x.0)
            .map(|(&c, &a)| c * QMonomial::q_pow(a))
            .collect();
        Ok(Self {
            datum: self.datum.clone(),
            coords,
        })
    }

    /// Applies a simple-reflection word to the torus element.
    pub fn conjugate(&self, word: &[usize]) -> Self {
        Self {
            datum: self.datum.clone(),
            coords: self.datum.apply_word_torus(word, &self.coords),
        }
    }
}

impl fmt::Display for UnramifiedParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(", "))
    }
}

/// `ψ = (φ, ρ)` with `φ` bounded and `ρ` landing in the centralizer of `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArthurParameter {
    phi: UnramifiedParameter,
    rho: SL2Data,
}

impl ArthurParameter {
    pub fn new(phi: UnramifiedParameter, rho: SL2Data) -> Result<Self> {
        let d = phi.datum().clone();
        for (index, c) in phi.coords().iter().enumerate() {
            if !c.exponent().is_zero() {
                return Err(Error::Unbounded {
                    index,
                    exponent: c.exponent().to_string(),
                });
            }
        }
        validate_sl2_data(&d, &rho)?;
        for root in rho.s() {
            let value = phi.evaluate_root(root)?;
            if !value.is_one() {
                return Err(Error::Centralizer {
                    root: root.clone(),
                    value,
                });
            }
        }
        Ok(Self { phi, rho })
    }

    pub fn phi(&self) -> &UnramifiedParameter {
        &self.phi
    }

    pub fn rho(&self) -> &SL2Data {
        &self.rho
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.phi.datum()
    }
}

pub fn make_arthur_parameter(phi: UnramifiedParameter, rho: SL2Data) -> Result<ArthurParameter> {
    ArthurParameter::new(phi, rho)
}

/// The Langlands parameter of `ψ`: each coordinate picks up `q^{d_i/2}`
/// from the `SL2` factor evaluated at `diag(|w|^{1/2}, |w|^{-1/2})`.
pub fn phi_psi(psi: &ArthurParameter) -> UnramifiedParameter {
    let half = ExponentVector(
        psi.rho
            .h()
            .values()
            .iter()
            .map(|&d| Rational::new(d, 2))
            .collect(),
    );
    psi.phi
        .twist(&half)
        .expect("diagram length is checked at construction")
}

/// Splits into the unit part `φ₀` and the exponent vector of `φ₊`.
pub fn decompose_phi0_phiplus(p: &UnramifiedParameter) -> (UnramifiedParameter, ExponentVector) {
    let phi0 = UnramifiedParameter {
        datum: p.datum.clone(),
        coords: p.coords.iter().map(|c| c.unit_part()).collect(),
    };
    (phi0, p.exponents())
}

pub fn recompose(phi0: &UnramifiedParameter, plus: &ExponentVector) -> Result<UnramifiedParameter> {
    phi0.twist(plus)
}

pub fn is_tempered(p: &UnramifiedParameter) -> bool {
    p.exponents().is_zero()
}

/// Simple roots on which the (dominant) exponent vector vanishes.
pub fn defining_levi(nu: &ExponentVector, d: &RootDatum) -> Result<LeviSubset> {
    d.check_len("exponent vector", nu.0.len())?;
    if let Some((index, value)) = nu.0.iter().enumerate().find(|(_, x)| **x < Rational::zero()) {
        return Err(Error::NotDominant {
            index,
            value: value.to_string(),
        });
    }
    LeviSubset::new(
        d.rank(),
        nu.0.iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(i, _)| i),
    )
}

/// What can be read back from a Langlands parameter of Arthur type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredPsi {
    pub phi0: UnramifiedParameter,
    pub h: WeightedDynkinDiagram,
    /// Word that dominantized the exponents (and was applied to the units).
    pub word: Vec<usize>,
}

/// Recovers `(φ, H)` from `φ_ψ` up to Weyl conjugacy.
pub fn recover_psi(p: &UnramifiedParameter) -> Result<RecoveredPsi> {
    let exps = p.exponents();
    for (index, x) in exps.0.iter().enumerate() {
        if !(*x * Rational::from_integer(2)).is_integer() {
            return Err(Error::NotHalfIntegral {
                index,
                value: x.to_string(),
            });
        }
    }
    let (dominant, word) = p.datum.dominantize(&exps.0)?;
    let doubled: Vec<i64> = dominant
        .iter()
        .map(|x| (*x * Rational::from_integer(2)).to_integer())
        .collect();
    if let Some((index, &value)) = doubled.iter().enumerate().find(|(_, v)| !(0..=2).contains(*v)) {
        return Err(Error::NotArthurType {
            index,
            value: value.to_string(),
        });
    }
    let h = WeightedDynkinDiagram::new(&doubled)?;
    let (phi0, _) = decompose_phi0_phiplus(&p.conjugate(&word));
    Ok(RecoveredPsi { phi0, h, word })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::{sl2_data_from_partition, Partition};
    use crate::root_datum::Family;

    fn datum(s: &str) -> Arc<RootDatum> {
        Arc::new(RootDatum::new(s.parse().unwrap()))
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn a2_21() -> ArthurParameter {
        let d = datum("A2");
        let rho = sl2_data_from_partition(Family::A, 2, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        ArthurParameter::new(UnramifiedParameter::trivial(d), rho).unwrap()
    }

    #[test]
    fn arthur_parameter_validation() {
        let d = datum("A1");
        let principal = SL2Data::new(&d, &[2], vec![d.simple_root(0)]).unwrap();
        assert!(ArthurParameter::new(UnramifiedParameter::trivial(d.clone()), principal.clone()).is_ok());

        let unbounded = UnramifiedParameter::new(d.clone(), vec![QMonomial::q_pow(r(1, 2))]).unwrap();
        assert!(matches!(
            ArthurParameter::new(unbounded, principal.clone()),
            Err(Error::Unbounded { index: 0, .. })
        ));

        let minus_one = UnramifiedParameter::from_unit_angles(d.clone(), &[r(1, 2)]).unwrap();
        match ArthurParameter::new(minus_one, principal) {
            Err(Error::Centralizer { root, value }) => {
                assert_eq!(root, d.simple_root(0));
                assert_eq!(value, QMonomial::root_of_unity(r(1, 2)));
            }
            other => panic!("expected centralizer error, got {other:?}"),
        }
    }

    #[test]
    fn langlands_parameter_of_psi() {
        let d = datum("A1");
        let trivial_rho = ArthurParameter::new(
            UnramifiedParameter::from_unit_angles(d.clone(), &[r(1, 3)]).unwrap(),
            SL2Data::trivial(1),
        )
        .unwrap();
        assert_eq!(phi_psi(&trivial_rho), *trivial_rho.phi());

        let principal = ArthurParameter::new(
            UnramifiedParameter::trivial(d.clone()),
            SL2Data::new(&d, &[2], vec![d.simple_root(0)]).unwrap(),
        )
        .unwrap();
        assert_eq!(phi_psi(&principal).coords(), &[QMonomial::q_pow(r(1, 1))]);

        let p = phi_psi(&a2_21());
        assert_eq!(p.coords(), &[QMonomial::q_pow(r(1, 2)); 2]);
        let top = Root::new(vec![1, 1]).unwrap();
        assert_eq!(p.evaluate_root(&top).unwrap(), QMonomial::q_pow(r(1, 1)));
    }

    #[test]
    fn decomposition() {
        let d = datum("A2");
        let p = UnramifiedParameter::new(d.clone(), vec![QMonomial::new(r(1, 4), r(1, 1)), QMonomial::one()]).unwrap();
        let (phi0, plus) = decompose_phi0_phiplus(&p);
        assert_eq!(phi0.coords()[0], QMonomial::root_of_unity(r(1, 4)));
        assert_eq!(plus.entries(), &[r(1, 1), r(0, 1)]);
        assert_eq!(recompose(&phi0, &plus).unwrap(), p);

        let t = UnramifiedParameter::from_unit_angles(d, &[r(1, 3), r(2, 3)]).unwrap();
        assert!(is_tempered(&t));
        assert!(decompose_phi0_phiplus(&t).1.is_zero());
        assert!(!is_tempered(&p));
    }

    #[test]
    fn levi_from_exponents() {
        let d = datum("A2");
        let nu = |v: [Rational; 2]| ExponentVector(v.to_vec());
        assert!(defining_levi(&nu([r(0, 1), r(0, 1)]), &d).unwrap().is_all());
        assert!(defining_levi(&nu([r(1, 2), r(1, 2)]), &d).unwrap().is_empty());
        assert_eq!(
            defining_levi(&nu([r(0, 1), r(1, 1)]), &d).unwrap(),
            LeviSubset::new(2, [0]).unwrap()
        );
        assert!(matches!(
            defining_levi(&nu([r(-1, 1), r(1, 1)]), &d),
            Err(Error::NotDominant { index: 0, .. })
        ));
    }

    #[test]
    fn recovery() {
        let rec = recover_psi(&phi_psi(&a2_21())).unwrap();
        assert_eq!(rec.h.values(), vec![1, 1]);
        assert!(rec.phi0.coords().iter().all(|c| c.is_one()));

        let d = datum("A2");
        let t = UnramifiedParameter::from_unit_angles(d.clone(), &[r(1, 4), r(0, 1)]).unwrap();
        assert!(recover_psi(&t).unwrap().h.is_zero());

        let third = UnramifiedParameter::new(d.clone(), vec![QMonomial::q_pow(r(1, 3)), QMonomial::one()]).unwrap();
        assert!(matches!(recover_psi(&third), Err(Error::NotHalfIntegral { index: 0, .. })));

        let big = UnramifiedParameter::new(d.clone(), vec![QMonomial::q_pow(r(3, 2)), QMonomial::one()]).unwrap();
        assert!(matches!(recover_psi(&big), Err(Error::NotArthurType { .. })));

        // Weyl-conjugated input still recovers the dominant diagram.
        let conj = phi_psi(&a2_21()).conjugate(&[0]);
        assert_eq!(recover_psi(&conj).unwrap().h.values(), vec![1, 1]);
    }
}
