//! Exact numbers of the form `ζ · q^a`.
//!
//! `q` is a formal symbol standing for the residue-field cardinality and is
//! never given a numeric value. `ζ = exp(2πi·k/m)` is a root of unity stored
//! by its angle `k/m ∈ [0, 1)`.

use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// `ζ · q^a` with `ζ` a root of unity and `a` rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMonomial {
    unit: Rational,
    exponent: Rational,
}

/// Reduces an angle into `[0, 1)`.
pub fn normalize_angle(angle: Rational) -> Rational {
    let frac = angle - angle.floor();
    debug_assert!(frac >= Rational::zero() && frac < Rational::one());
    frac
}

impl QMonomial {
    pub fn new(unit: Rational, exponent: Rational) -> Self {
        Self {
            unit: normalize_angle(unit),
            exponent,
        }
    }

    pub fn one() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    /// `q^a`.
    pub fn q_pow(exponent: Rational) -> Self {
        Self::new(Rational::zero(), exponent)
    }

    /// The root of unity `exp(2πi·angle)`.
    pub fn root_of_unity(angle: Rational) -> Self {
        Self::new(angle, Rational::zero())
    }

    /// Angle `k/m` of the unit part, in lowest terms and in `[0, 1)`.
    pub fn unit(&self) -> Rational {
        self.unit
    }

    pub fn exponent(&self) -> Rational {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_zero() && self.exponent.is_zero()
    }

    /// True when the unit part is exactly 1.
    pub fn has_trivial_unit(&self) -> bool {
        self.unit.is_zero()
    }

    /// The order of the unit part as a root of unity.
    pub fn unit_order(&self) -> i64 {
        *self.unit.denom()
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.unit, -self.exponent)
    }

    pub fn pow(&self, n: i64) -> Self {
        let n = Rational::from_integer(n);
        Self::new(self.unit * n, self.exponent * n)
    }

    /// Unit part alone.
    pub fn unit_part(&self) -> Self {
        Self::root_of_unity(self.unit)
    }

    /// `|·|`-part alone, i.e. `q^a`.
    pub fn absolute_part(&self) -> Self {
        Self::q_pow(self.exponent)
    }

    /// Whether the Euler factor `1 - self · q^{-s}` vanishes at real `s`.
    ///
    /// For real `q > 1` the number `ζ · q^{a-s}` equals 1 only when `ζ = 1`
    /// and `a = s`, so the answer does not depend on `q`.
    pub fn euler_factor_vanishes_at(&self, s: Rational) -> bool {
        self.has_trivial_unit() && self.exponent == s
    }
}

impl Default for QMonomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for QMonomial {
    type Output = QMonomial;

    fn mul(self, rhs: QMonomial) -> QMonomial {
        QMonomial::new(self.unit + rhs.unit, self.exponent + rhs.exponent)
    }
}

impl Div for QMonomial {
    type Output = QMonomial;

    fn div(self, rhs: QMonomial) -> QMonomial {
        self * rhs.inv()
    }
}

impl std::iter::Product for QMonomial {
    fn product<I: Iterator<Item = QMonomial>>(iter: I) -> Self {
        iter.fold(QMonomial::one(), |acc, x| acc * x)
    }
}

/// Writes a rational as `num/den`, always with an explicit denominator.
pub fn fmt_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer into a normalized rational.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

fn fmt_exponent(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.unit.is_zero(), self.exponent.is_zero()) {
            (true, true) => write!(f, "1"),
            (true, false) => write!(f, "q^{}", fmt_exponent(&self.exponent)),
            (false, true) => write!(f, "ζ[{}]", fmt_ratio(&self.unit)),
            (false, false) => write!(
                f,
                "ζ[{}]·q^{}",
                fmt_ratio(&self.unit),
                fmt_exponent(&self.exponent)
            ),
        }
    }
}

/// Least common multiple of the unit orders in a collection.
pub fn common_unit_order<'a>(values: impl IntoIterator<Item = &'a QMonomial>) -> i64 {
    values
        .into_iter()
        .fold(1, |acc, m| acc.lcm(&m.unit_order()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn angles_reduce_mod_one() {
        let z = QMonomial::root_of_unity(r(5, 4));
        assert_eq!(z.unit(), r(1, 4));
        let z = QMonomial::root_of_unity(r(-1, 4));
        assert_eq!(z.unit(), r(3, 4));
        assert_eq!(z.unit_order(), 4);
    }

    #[test]
    fn multiplication_adds_exponents_and_angles() {
        let a = QMonomial::new(r(3, 4), r(1, 2));
        let b = QMonomial::new(r(1, 2), r(1, 2));
        let c = a * b;
        assert_eq!(c.unit(), r(1, 4));
        assert_eq!(c.exponent(), r(1, 1));
        assert!((a * a.inv()).is_one());
        assert_eq!(a.pow(4).unit(), r(0, 1));
        assert_eq!(a.pow(-2), (a * a).inv());
    }

    #[test]
    fn euler_factor_vanishing_needs_trivial_unit() {
        assert!(QMonomial::q_pow(r(1, 1)).euler_factor_vanishes_at(r(1, 1)));
        assert!(!QMonomial::new(r(1, 2), r(1, 1)).euler_factor_vanishes_at(r(1, 1)));
        assert!(!QMonomial::root_of_unity(r(1, 3)).euler_factor_vanishes_at(r(1, 1)));
        assert!(!QMonomial::q_pow(r(1, 2)).euler_factor_vanishes_at(r(1, 1)));
    }

    #[test]
    fn display() {
        assert_eq!(QMonomial::one().to_string(), "1");
        assert_eq!(QMonomial::q_pow(r(1, 1)).to_string(), "q^1");
        assert_eq!(QMonomial::q_pow(r(1, 2)).to_string(), "q^1/2");
        assert_eq!(
            QMonomial::new(r(1, 4), r(1, 1)).to_string(),
            "ζ[1/4]·q^1"
        );
    }

    #[test]
    fn ratio_text() {
        assert_eq!(parse_ratio("2/4"), Some(r(1, 2)));
        assert_eq!(parse_ratio(" -3 "), Some(r(-3, 1)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(fmt_ratio(&r(4, 2)), "2/1");
    }
}
