//! Nilpotent orbits of the dual group: partitions, weighted Dynkin diagrams
//! and the `SL2`-data `(H, S)` of an Arthur parameter.
//!
//! For classical types a nilpotent orbit is labelled by the Jordan type of a
//! nilpotent element in the defining representation. Each part `m`
//! contributes the `h`-weights `m-1, m-3, ..., 1-m`; sorting them into the
//! dominant chamber gives the diagram.
//!
//! `S` is obtained by realizing the triple on weight vectors of a maximal
//! torus (see [`sl2_data_from_partition`]) and recording which positive root
//! spaces the nilpositive element touches.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_datum::{Family, Root, RootDatum};

pub mod oracle;

pub use oracle::{oracle_matrix_triple, MatrixTriple};

/// A partition, stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; rejects empty input and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::DegeneratePartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `part -> multiplicity`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The concatenated weight strings, sorted descending.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.0.iter().flat_map(|&m| weight_string(m)).collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `m-1, m-3, ..., 1-m`.
pub fn weight_string(m: usize) -> impl Iterator<Item = i64> {
    let m = m as i64;
    (0..m).map(move |k| m - 1 - 2 * k)
}

/// Dimension of the defining representation of the classical group of this
/// type.
pub fn defining_dimension(family: Family, rank: usize) -> Result<usize> {
    match family {
        Family::A => Ok(rank + 1),
        Family::B => Ok(2 * rank + 1),
        Family::C | Family::D => Ok(2 * rank),
        Family::G => Err(Error::NoPartitionModel(family)),
    }
}

/// Whether parts of size `m` carry an invariant form by themselves (as
/// opposed to coming in dual pairs).
fn self_dual_part(family: Family, m: usize) -> bool {
    match family {
        Family::B | Family::D => m % 2 == 1,
        Family::C => m % 2 == 0,
        _ => true,
    }
}

pub fn validate_partition(family: Family, rank: usize, p: &Partition) -> Result<()> {
    let expected = defining_dimension(family, rank)?;
    if p.total() != expected {
        return Err(Error::PartitionTotal {
            family,
            rank,
            expected,
            found: p.total(),
        });
    }
    if family == Family::A {
        return Ok(());
    }
    let parity = match family {
        Family::C => "odd",
        _ => "even",
    };
    for (&part, &multiplicity) in p.multiplicities().iter().rev() {
        if !self_dual_part(family, part) && multiplicity % 2 == 1 {
            return Err(Error::PartitionParity {
                family,
                part,
                multiplicity,
                parity,
            });
        }
    }
    Ok(())
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions labelling nilpotent orbits of the given classical type.
pub fn valid_partitions(family: Family, rank: usize) -> Result<Vec<Partition>> {
    let n = defining_dimension(family, rank)?;
    Ok(partitions_of(n)
        .into_iter()
        .filter(|p| validate_partition(family, rank, p).is_ok())
        .collect())
}

/// Type D partitions with only even parts label two orbits; only one diagram
/// is emitted for them.
pub fn is_very_even(family: Family, p: &Partition) -> bool {
    family == Family::D && p.parts().iter().all(|m| m % 2 == 0)
}

/// Simple-root values `α_i(H)`, each in `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDynkinDiagram(Vec<u8>);

impl WeightedDynkinDiagram {
    pub fn new(values: &[i64]) -> Result<Self> {
        values
            .iter()
            .enumerate()
            .map(|(index, &value)| match value {
                0..=2 => Ok(value as u8),
                _ => Err(Error::DiagramEntry { index, value }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(WeightedDynkinDiagram)
    }

    pub fn zero(rank: usize) -> Self {
        WeightedDynkinDiagram(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|&v| v as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// `β(H)`.
    pub fn pair(&self, r: &Root) -> i64 {
        r.pair_with(&self.values())
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// The `SL2`-component of an Arthur parameter: the dominant semisimple
/// element `H` (as a weighted diagram) and the positive roots `S` whose root
/// vectors carry the nilpositive element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SL2Data {
    h: WeightedDynkinDiagram,
    s: Vec<Root>,
}

impl SL2Data {
    pub fn trivial(rank: usize) -> Self {
        SL2Data {
            h: WeightedDynkinDiagram::zero(rank),
            s: Vec::new(),
        }
    }

    /// Expert-mode constructor from raw data; runs [`validate_sl2_data`].
    pub fn new(d: &RootDatum, h: &[i64], s: Vec<Root>) -> Result<Self> {
        d.check_len("H", h.len())?;
        let h = WeightedDynkinDiagram::new(h)?;
        for r in &s {
            d.check_len("root in S", r.rank())?;
        }
        let data = SL2Data::from_parts(h, s);
        validate_sl2_data(d, &data)?;
        Ok(data)
    }

    /// Sorts and dedups `S` into the datum's enumeration order.
    fn from_parts(h: WeightedDynkinDiagram, mut s: Vec<Root>) -> Self {
        s.sort_by(|a, b| a.enumeration_cmp(b));
        s.dedup();
        SL2Data { h, s }
    }

    pub fn h(&self) -> &WeightedDynkinDiagram {
        &self.h
    }

    pub fn s(&self) -> &[Root] {
        &self.s
    }

    pub fn is_trivial(&self) -> bool {
        self.h.is_zero()
    }
}

/// Checks diagram entries, positivity and `β(H) = 2` for every `β ∈ S`, and
/// that `S` is empty exactly when `H` is zero.
///
/// This does not certify that `(H, S)` comes from an actual nilpotent orbit.
pub fn validate_sl2_data(d: &RootDatum, data: &SL2Data) -> Result<()> {
    d.check_len("H", data.h.rank())?;
    for r in &data.s {
        if !d.is_root(r) {
            return Err(Error::NotARoot(r.clone()));
        }
        if !r.is_positive() {
            return Err(Error::NotPositive(r.clone()));
        }
        let pairing = data.h.pair(r);
        if pairing != 2 {
            return Err(Error::Sl2Pairing {
                root: r.clone(),
                pairing,
            });
        }
    }
    match (data.h.is_zero(), data.s.is_empty()) {
        (false, true) => Err(Error::Sl2MissingRoots),
        (true, false) => Err(Error::Sl2SpuriousRoots),
        _ => Ok(()),
    }
}

fn classical_datum(family: Family, rank: usize) -> Result<RootDatum> {
    if !family.is_classical() {
        return Err(Error::NoPartitionModel(family));
    }
    Ok(RootDatum::new(crate::root_datum::CartanSpec::new(family, rank)?))
}

/// Evaluates the ambient simple roots on a diagonal `h` given by its
/// coordinates.
fn diagram_of(d: &RootDatum, h_coords: &[i64]) -> Result<WeightedDynkinDiagram> {
    let simple = d
        .ambient_simple_roots()
        .ok_or(Error::NoPartitionModel(d.spec().family()))?;
    let values: Vec<i64> = simple
        .iter()
        .map(|a| a.iter().zip(h_coords).map(|(&x, &y)| x as i64 * y).sum())
        .collect();
    WeightedDynkinDiagram::new(&values)
}

pub fn wdd_from_partition(family: Family, rank: usize, p: &Partition) -> Result<WeightedDynkinDiagram> {
    validate_partition(family, rank, p)?;
    let d = classical_datum(family, rank)?;
    let mut weights = p.weights();
    if family != Family::A {
        weights.truncate(rank);
    }
    diagram_of(&d, &weights)
}

/// Basis vector `k` of Jordan block `block`; its `h`-weight is `m-1-2k`.
type BasisVec = (usize, usize);

#[derive(Debug, Clone, Copy)]
enum Member {
    Plus(usize),
    Minus(usize),
    /// Anisotropic zero-weight vector mixed into a hyperbolic pair.
    Mixed(usize),
    Zero,
}

struct TorusFrame {
    /// `h`-value per slot, dominant order
    slot_h: Vec<i64>,
    member: HashMap<BasisVec, Member>,
    blocks: Vec<usize>,
}

/// Assigns every Jordan basis vector to torus weights `±e_i` (or 0) so that
/// `h` becomes dominant, breaking ties by the order of parts.
fn torus_frame(family: Family, rank: usize, p: &Partition) -> Result<TorusFrame> {
    let blocks: Vec<usize> = p.parts().to_vec();
    let h_of = |(b, k): BasisVec| blocks[b] as i64 - 1 - 2 * k as i64;

    // (h, key, kind) where kind tells how the slot's vectors are laid out
    enum SlotKind {
        Pair { plus: BasisVec, minus: BasisVec },
        Middles(BasisVec, BasisVec),
        Single(BasisVec),
    }
    let mut slots: Vec<(i64, BasisVec, SlotKind)> = Vec::new();

    if family == Family::A {
        for (b, &m) in blocks.iter().enumerate() {
            for k in 0..m {
                slots.push((h_of((b, k)), (b, k), SlotKind::Single((b, k))));
            }
        }
    } else {
        let mut middles = Vec::new();
        let mut b = 0;
        while b < blocks.len() {
            let m = blocks[b];
            if self_dual_part(family, m) {
                for k in 0..m {
                    let j = m - 1 - k;
                    if k < j {
                        slots.push((h_of((b, k)), (b, k), SlotKind::Pair { plus: (b, k), minus: (b, j) }));
                    } else if k == j {
                        middles.push((b, k));
                    }
                }
                b += 1;
            } else {
                let partner = b + 1;
                if blocks.get(partner) != Some(&m) {
                    return Err(Error::InvariantViolation(format!(
                        "part {m} has no partner block"
                    )));
                }
                for k in 0..m {
                    let x = (b, k);
                    let y = (partner, m - 1 - k);
                    if h_of(x) >= 0 {
                        slots.push((h_of(x), x, SlotKind::Pair { plus: x, minus: y }));
                    } else {
                        slots.push((h_of(y), y, SlotKind::Pair { plus: y, minus: x }));
                    }
                }
                b += 2;
            }
        }
        for pair in middles.chunks(2) {
            match pair {
                [u, v] => slots.push((0, *u, SlotKind::Middles(*u, *v))),
                [u] => slots.push((0, *u, SlotKind::Single(*u))),
                _ => unreachable!(),
            }
        }
    }

    slots.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut member = HashMap::new();
    let mut slot_h = Vec::new();
    for (h, _, kind) in slots {
        match kind {
            SlotKind::Pair { plus, minus } => {
                let i = slot_h.len();
                slot_h.push(h);
                member.insert(plus, Member::Plus(i));
                member.insert(minus, Member::Minus(i));
            }
            SlotKind::Middles(u, v) => {
                let i = slot_h.len();
                slot_h.push(0);
                member.insert(u, Member::Mixed(i));
                member.insert(v, Member::Mixed(i));
            }
            SlotKind::Single(u) if family == Family::A => {
                let i = slot_h.len();
                slot_h.push(h);
                member.insert(u, Member::Plus(i));
            }
            SlotKind::Single(u) => {
                member.insert(u, Member::Zero);
            }
        }
    }
    let expected = if family == Family::A { rank + 1 } else { rank };
    if slot_h.len() != expected {
        return Err(Error::InvariantViolation(format!(
            "torus frame for {family}{rank} {p} has {} slots, expected {expected}",
            slot_h.len()
        )));
    }
    Ok(TorusFrame {
        slot_h,
        member,
        blocks,
    })
}

impl TorusFrame {
    /// Ambient weights spanned by the torus-weight expansion of a vector.
    fn weights(&self, v: BasisVec, dim: usize) -> Vec<Vec<i64>> {
        let unit = |i: usize, sign: i64| {
            let mut w = vec![0; dim];
            w[i] = sign;
            w
        };
        match self.member[&v] {
            Member::Plus(i) => vec![unit(i, 1)],
            Member::Minus(i) => vec![unit(i, -1)],
            Member::Mixed(i) => vec![unit(i, 1), unit(i, -1)],
            Member::Zero => vec![vec![0; dim]],
        }
    }
}

/// The canonical `(H, S)` attached to a partition.
///
/// The standard Jordan triple (`e w_{k+1} = w_k` on each block) is written
/// in a torus-adapted basis where `h` is dominant; `S` is the set of
/// positive roots `β` whose root space meets `e`.
pub fn sl2_data_from_partition(family: Family, rank: usize, p: &Partition) -> Result<SL2Data> {
    let h = wdd_from_partition(family, rank, p)?;
    let d = classical_datum(family, rank)?;
    let frame = torus_frame(family, rank, p)?;
    if diagram_of(&d, &frame.slot_h)? != h {
        return Err(Error::InvariantViolation(format!(
            "torus frame of {p} disagrees with its weighted diagram"
        )));
    }

    let dim = frame.slot_h.len();
    let mut s = Vec::new();
    for (b, &m) in frame.blocks.iter().enumerate() {
        for k in 0..m.saturating_sub(1) {
            for target in frame.weights((b, k), dim) {
                for source in frame.weights((b, k + 1), dim) {
                    let v: Vec<i32> = target.iter().zip(&source).map(|(t, s)| (t - s) as i32).collect();
                    if v.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let root = d.root_from_ambient(&v).ok_or_else(|| {
                        Error::InvariantViolation(format!("{v:?} is not a root of {}", d.spec()))
                    })?;
                    if !root.is_positive() {
                        return Err(Error::InvariantViolation(format!(
                            "nilpositive element of {p} touches negative root {root}"
                        )));
                    }
                    s.push(root);
                }
            }
        }
    }
    let data = SL2Data::from_parts(h, s);
    validate_sl2_data(&d, &data)?;
    Ok(data)
}
