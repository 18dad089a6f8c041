//! Root systems, Weyl reflections and Levi splittings.
//!
//! Simple roots use Bourbaki numbering. The Cartan matrix is stored as
//! `a[i][j] = <α_j, α_i^∨>`, so the simple reflection `s_i` acts on a root
//! written in the simple-root basis by `β ↦ β - (Σ_j β_j a[i][j]) α_i`.
//!
//! Torus elements and exponent vectors are carried by their evaluations on
//! the simple roots; `s_i` acts on those coordinates by
//! `e_j ↦ e_j - e_i a[i][j]`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{QMonomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl Family {
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        }
    }

    pub fn is_classical(self) -> bool {
        !matches!(self, Family::G)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan type such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanSpec {
    family: Family,
    rank: usize,
}

impl CartanSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reason = match family {
            _ if rank == 0 => Some("rank must be positive"),
            Family::B | Family::C if rank < 2 => Some("B and C need rank >= 2"),
            Family::D if rank < 3 => Some("D needs rank >= 3"),
            Family::G if rank != 2 => Some("G exists only in rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidCartanSpec {
                family,
                rank,
                reason,
            }),
            None => Ok(Self { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual(&self) -> CartanSpec {
        CartanSpec {
            family: self.family.dual(),
            rank: self.rank,
        }
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(Error::CartanSyntax(s.to_string())),
        };
        let rank = chars
            .as_str()
            .trim_start_matches('_')
            .parse::<usize>()
            .map_err(|_| Error::CartanSyntax(s.to_string()))?;
        CartanSpec::new(family, rank)
    }
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    /// Wraps a coefficient vector; it must be nonzero with all coefficients of
    /// one sign.
    pub fn new(coeffs: Vec<i32>) -> Option<Self> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        let nonzero = coeffs.iter().any(|&c| c != 0);
        (nonzero && (pos || neg)).then_some(Root(coeffs))
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Support lies entirely inside `theta`.
    pub fn supported_on(&self, theta: &LeviSubset) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || theta.contains(i))
    }

    /// `Σ c_i d_i` for a vector of simple-root values `d`.
    pub fn pair_with(&self, values: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(values)
            .map(|(&c, &d)| c as i64 * d)
            .sum()
    }

    /// `Σ c_i x_i` over rational simple-root evaluations.
    pub fn pair_rational(&self, values: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(values)
            .map(|(&c, &x)| x * Rational::from_integer(c as i64))
            .sum()
    }

    /// Fixed enumeration order: by height, then earlier simple roots first.
    pub fn enumeration_cmp(&self, other: &Root) -> std::cmp::Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A set of simple-root indices defining a standard Levi subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviSubset {
    rank: usize,
    theta: BTreeSet<usize>,
}

impl LeviSubset {
    pub fn new(rank: usize, theta: impl IntoIterator<Item = usize>) -> Result<Self> {
        let theta: BTreeSet<usize> = theta.into_iter().collect();
        if let Some(&index) = theta.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        Ok(Self { rank, theta })
    }

    pub fn all(rank: usize) -> Self {
        Self {
            rank,
            theta: (0..rank).collect(),
        }
    }

    pub fn empty(rank: usize) -> Self {
        Self {
            rank,
            theta: BTreeSet::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.theta.contains(&i)
    }

    pub fn is_all(&self) -> bool {
        self.theta.len() == self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.theta.iter().copied()
    }
}

impl fmt::Display for LeviSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.theta.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// A reduced root system with its Cartan matrix and positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    spec: CartanSpec,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
}

/// Bourbaki Cartan matrix with `a[i][j] = <α_j, α_i^∨>`.
fn cartan_matrix(spec: CartanSpec) -> Vec<Vec<i32>> {
    let n = spec.rank();
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain_len = match spec.family() {
        Family::D => n - 1,
        _ => n,
    };
    for i in 0..chain_len.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    match spec.family() {
        Family::A => {}
        Family::B => {
            // α_n short
            a[n - 1][n - 2] = -2;
        }
        Family::C => {
            // α_n long
            a[n - 2][n - 1] = -2;
        }
        Family::D => {
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        Family::G => {
            // α_1 short, α_2 long
            a[0][1] = -3;
        }
    }
    a
}

/// Closure of the simple roots under simple reflections, kept positive.
fn generate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..n {
        let r = Root::simple(n, i).0;
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let p: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if p == 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= p;
            if next.iter().all(|&c| c >= 0) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.enumeration_cmp(b));
    roots
}

impl RootDatum {
    pub fn new(spec: CartanSpec) -> Self {
        Self::from_cartan(spec, cartan_matrix(spec))
    }

    fn from_cartan(spec: CartanSpec, cartan: Vec<Vec<i32>>) -> Self {
        let positive_roots = generate_positive_roots(&cartan);
        Self {
            spec,
            cartan,
            positive_roots,
        }
    }

    /// The datum with roots and coroots exchanged.
    pub fn dual(&self) -> RootDatum {
        let n = self.rank();
        let transposed = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[j][i]).collect())
            .collect();
        Self::from_cartan(self.spec.dual(), transposed)
    }

    pub fn spec(&self) -> CartanSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots in the fixed enumeration order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.positive_roots.contains(r)
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.is_positive_root(r) || self.is_positive_root(&r.negate())
    }

    /// Index of a positive root in the enumeration order.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|x| x == r)
    }

    pub(crate) fn check_len(&self, what: &'static str, found: usize) -> Result<()> {
        if found == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                what,
                expected: self.rank(),
                found,
            })
        }
    }

    /// `<β, α_i^∨>`.
    pub fn coroot_pairing(&self, beta: &Root, i: usize) -> i32 {
        beta.coeffs()
            .iter()
            .zip(&self.cartan[i])
            .map(|(c, a)| c * a)
            .sum()
    }

    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let p = self.coroot_pairing(beta, i);
        let mut c = beta.coeffs().to_vec();
        c[i] -= p;
        Root(c)
    }

    /// Applies `s_i` to rational simple-root evaluations.
    pub fn reflect_evaluations(&self, i: usize, values: &[Rational]) -> Vec<Rational> {
        let ei = values[i];
        values
            .iter()
            .enumerate()
            .map(|(j, &ej)| ej - ei * Rational::from_integer(self.cartan[i][j] as i64))
            .collect()
    }

    /// Applies `s_i` to a torus element given by its simple-root evaluations.
    pub fn reflect_torus(&self, i: usize, coords: &[QMonomial]) -> Vec<QMonomial> {
        let ti = coords[i];
        coords
            .iter()
            .enumerate()
            .map(|(j, &tj)| tj * ti.pow(-(self.cartan[i][j] as i64)))
            .collect()
    }

    /// Applies a reflection word, first letter first.
    pub fn apply_word_evaluations(&self, word: &[usize], values: &[Rational]) -> Vec<Rational> {
        word.iter()
            .fold(values.to_vec(), |v, &i| self.reflect_evaluations(i, &v))
    }

    pub fn apply_word_torus(&self, word: &[usize], coords: &[QMonomial]) -> Vec<QMonomial> {
        word.iter()
            .fold(coords.to_vec(), |v, &i| self.reflect_torus(i, &v))
    }

    pub fn apply_word_root(&self, word: &[usize], beta: &Root) -> Root {
        word.iter()
            .fold(beta.clone(), |b, &i| self.reflect_root(i, &b))
    }

    /// Moves a vector of simple-root evaluations into the closed dominant
    /// chamber, returning the result and the reflection word used.
    pub fn dominantize(&self, values: &[Rational]) -> Result<(Vec<Rational>, Vec<usize>)> {
        self.check_len("evaluation vector", values.len())?;
        let mut v = values.to_vec();
        let mut word = Vec::new();
        while let Some(i) = v.iter().position(|x| *x < Rational::zero()) {
            v = self.reflect_evaluations(i, &v);
            word.push(i);
            if word.len() > self.positive_roots.len() {
                return Err(Error::InvariantViolation(
                    "dominantization exceeded the number of positive roots".into(),
                ));
            }
        }
        Ok((v, word))
    }

    /// Positive roots of the Levi of `theta` and of its unipotent radical.
    pub fn levi_and_nilradical(&self, theta: &LeviSubset) -> Result<(Vec<Root>, Vec<Root>)> {
        self.check_len("Levi subset", theta.rank())?;
        Ok(self
            .positive_roots
            .iter()
            .cloned()
            .partition(|r| r.supported_on(theta)))
    }

    /// Simple roots realized in the standard orthonormal basis `e_1, e_2, ...`
    /// (dimension `n+1` for type A, `n` for B, C, D).
    pub fn ambient_simple_roots(&self) -> Option<Vec<Vec<i32>>> {
        if self.cartan != cartan_matrix(self.spec) {
            return None;
        }
        let n = self.rank();
        let dim = match self.spec.family() {
            Family::A => n + 1,
            Family::G => return None,
            _ => n,
        };
        let e = |i: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = e(i);
            v[j] -= 1;
            v
        };
        let mut simple: Vec<Vec<i32>> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
        simple.push(match self.spec.family() {
            Family::A => diff(n - 1, n),
            Family::B => e(n - 1),
            Family::C => {
                let mut v = vec![0; dim];
                v[n - 1] = 2;
                v
            }
            Family::D => {
                let mut v = e(n - 2);
                v[n - 1] = 1;
                v
            }
            Family::G => unreachable!(),
        });
        Some(simple)
    }

    /// Converts an ambient-basis vector into simple-root coordinates.
    pub fn root_from_ambient(&self, v: &[i32]) -> Option<Root> {
        let simple = self.ambient_simple_roots()?;
        let cols = crate::linalg::int_columns(&simple);
        let rhs: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x as i64)).collect();
        let sol = crate::linalg::solve_columns(&cols, &rhs)?;
        let coeffs: Option<Vec<i32>> = sol
            .iter()
            .map(|x| x.is_integer().then(|| *x.numer() as i32))
            .collect();
        let r = Root::new(coeffs?)?;
        self.is_root(&r).then_some(r)
    }

    /// Converts simple-root evaluations of a vector into its coefficients in
    /// the basis of the roots *dual* to this datum's simple roots, i.e. solves
    /// `e_i = Σ_j c_j <α_i, α_j^∨>` for `c`.
    ///
    /// For the dual group's exponent vector this yields the coordinates of the
    /// corresponding character of `T` in the simple roots of `G`.
    pub fn coroot_coordinates(&self, evaluations: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len("evaluation vector", evaluations.len())?;
        let n = self.rank();
        // <α_i, α_j^∨> = a[j][i]; the column for c_j is (a[j][0..n]).
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| Rational::from_integer(self.cartan[j][i] as i64))
                    .collect()
            })
            .collect();
        crate::linalg::solve_columns(&cols, evaluations)
            .ok_or_else(|| Error::InvariantViolation("Cartan matrix is singular".into()))
    }

    /// Inverse of [`RootDatum::coroot_coordinates`].
    pub fn evaluations_from_coroot_coordinates(&self, coords: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len("coordinate vector", coords.len())?;
        let n = self.rank();
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| coords[j] * Rational::from_integer(self.cartan[j][i] as i64))
                    .sum()
            })
            .collect())
    }
}

/// Evaluation of a root on a torus element given by simple-root values:
/// `Π t_i^{c_i}`.
pub fn evaluate_root(r: &Root, coords: &[QMonomial]) -> Result<QMonomial> {
    if r.rank() != coords.len() {
        return Err(Error::DimensionMismatch {
            what: "torus coordinates",
            expected: r.rank(),
            found: coords.len(),
        });
    }
    Ok(r
        .coeffs()
        .iter()
        .zip(coords)
        .map(|(&c, t)| t.pow(c as i64))
        .product())
}
