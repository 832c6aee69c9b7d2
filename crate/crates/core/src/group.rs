//! Finite groups given by elements with exact equality: breadth-first
//! closure, element orders, centers and the invariants used to compare
//! groups.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::par;
use crate::pauli::PauliString;

/// Default element cap for closures.
pub const DEFAULT_CAP: usize = 10_000_000;

/// An element of some finite group with a canonical, hashable form.
pub trait GroupElement: Clone + Eq + Hash + Send + Sync {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl GroupElement for PauliString {
    fn op(&self, other: &Self) -> Self {
        *self * *other
    }
    fn inverse(&self) -> Self {
        PauliString::inverse(self)
    }
}

/// Matrices form a group here only under unitarity, so the inverse is the
/// conjugate transpose.
impl GroupElement for ExactMatrix {
    fn op(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Self {
        self.dagger()
    }
}

/// Unit-modulus scalars; the inverse is the conjugate.
impl GroupElement for CycScalar {
    fn op(&self, other: &Self) -> Self {
        *self * *other
    }
    fn inverse(&self) -> Self {
        self.conj()
    }
}

/// Isomorphism type of a center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CenterType {
    Trivial,
    Z2,
    Z4,
    Z2xZ2,
    Other(usize),
}

impl fmt::Display for CenterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterType::Trivial => f.write_str("1"),
            CenterType::Z2 => f.write_str("Z2"),
            CenterType::Z4 => f.write_str("Z4"),
            CenterType::Z2xZ2 => f.write_str("Z2xZ2"),
            CenterType::Other(n) => write!(f, "order-{n}"),
        }
    }
}

impl Serialize for CenterType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CenterType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "1" => Ok(CenterType::Trivial),
            "Z2" => Ok(CenterType::Z2),
            "Z4" => Ok(CenterType::Z4),
            "Z2xZ2" => Ok(CenterType::Z2xZ2),
            other => other
                .strip_prefix("order-")
                .and_then(|n| n.parse().ok())
                .map(CenterType::Other)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown center type {other}"))),
        }
    }
}

/// The triple used for isomorphism verdicts between the groups compared here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub order: u64,
    pub center: CenterType,
    pub order4: u64,
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}, center {}, {} elements of order 4", self.order, self.center, self.order4)
    }
}

/// An enumerated finite group. Element 0 is always the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroupRecord<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    generators: Vec<usize>,
    orders: Vec<u32>,
    center: Vec<usize>,
    histogram: BTreeMap<u32, usize>,
    labels: Option<Vec<String>>,
}

fn element_order<T: GroupElement>(g: &T, identity: &T) -> u32 {
    let mut acc = g.clone();
    let mut m = 1;
    while acc != *identity {
        acc = acc.op(g);
        m += 1;
    }
    m
}

impl<T: GroupElement> FiniteGroupRecord<T> {
    /// Wraps an already closed element list. `elements[0]` must be the
    /// identity and `generators` index into `elements`.
    pub fn from_elements(elements: Vec<T>, generators: Vec<usize>) -> Self {
        assert!(!elements.is_empty(), "a group has at least its identity");
        let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        assert_eq!(index.len(), elements.len(), "group elements must be distinct");
        let identity = &elements[0];
        let orders = par::map(&elements, |g| element_order(g, identity));
        let gens: Vec<&T> = generators.iter().map(|&i| &elements[i]).collect();
        let central = par::map(&elements, |g| gens.iter().all(|s| g.op(s) == s.op(g)));
        let center = central.iter().enumerate().filter(|(_, c)| **c).map(|(i, _)| i).collect();
        let mut histogram = BTreeMap::new();
        for &o in &orders {
            *histogram.entry(o).or_insert(0) += 1;
        }
        FiniteGroupRecord { elements, index, generators, orders, center, histogram, labels: None }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn identity(&self) -> &T {
        &self.elements[0]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<T> {
        self.generators.iter().map(|&i| self.elements[i].clone()).collect()
    }

    pub fn index_of(&self, g: &T) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &T) -> bool {
        self.index.contains_key(g)
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order_of(&self, i: usize) -> u32 {
        self.orders[i]
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_central(&self, g: &T) -> bool {
        self.generators.iter().all(|&s| {
            let s = &self.elements[s];
            g.op(s) == s.op(g)
        })
    }

    pub fn order_histogram(&self) -> &BTreeMap<u32, usize> {
        &self.histogram
    }

    pub fn count_of_order(&self, o: u32) -> usize {
        self.histogram.get(&o).copied().unwrap_or(0)
    }

    /// Elements with `g² = 1`, identity included.
    pub fn involution_count(&self) -> usize {
        self.count_of_order(1) + self.count_of_order(2)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.elements.len());
        self.labels = Some(labels);
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_elements();
        gens.iter().all(|a| gens.iter().all(|b| a.op(b) == b.op(a)))
    }

    pub fn center_type(&self) -> CenterType {
        match self.center.len() {
            1 => CenterType::Trivial,
            2 => CenterType::Z2,
            4 if self.center.iter().any(|&i| self.orders[i] == 4) => CenterType::Z4,
            4 => CenterType::Z2xZ2,
            n => CenterType::Other(n),
        }
    }

    pub fn invariants(&self) -> GroupInvariants {
        GroupInvariants {
            order: self.order() as u64,
            center: self.center_type(),
            order4: self.count_of_order(4) as u64,
        }
    }

    /// Number of distinct cyclic subgroups of order 4, found by collecting
    /// the sets `{1, g, g², g³}`.
    pub fn cyclic_order4_subgroups(&self) -> usize {
        let mut seen = HashSet::new();
        for (i, g) in self.elements.iter().enumerate() {
            if self.orders[i] != 4 {
                continue;
            }
            let g3 = g.op(g).op(g);
            let j = self.index[&g3];
            seen.insert((i.min(j), i.max(j)));
        }
        seen.len()
    }

    /// The subgroup generated by `gens` (which need not be elements of
    /// `self`, though they usually are).
    pub fn subgroup(&self, gens: &[T], cap: usize) -> Result<FiniteGroupRecord<T>> {
        closure(self.identity().clone(), gens, cap)
    }
}

/// Result of a closure that also propagates a label along every product.
#[derive(Clone, Debug)]
pub struct LabeledClosure<T, L> {
    pub group: FiniteGroupRecord<T>,
    pub labels: Vec<L>,
    /// False when some element was reached with two different labels.
    pub consistent: bool,
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// Elements are indexed in discovery order starting from `identity`.
/// Fails with [`Error::CapExceeded`] if more than `cap` elements appear.
pub fn closure<T: GroupElement>(identity: T, generators: &[T], cap: usize) -> Result<FiniteGroupRecord<T>> {
    let labels = vec![(); generators.len()];
    closure_labeled(identity, generators, (), &labels, |_, _| (), cap).map(|c| c.group)
}

/// Like [`closure`], also tracking a label for every element with
/// `label(g·s) = compose(label(g), label(s))`.
pub fn closure_labeled<T, L, F>(
    identity: T,
    generators: &[T],
    identity_label: L,
    generator_labels: &[L],
    compose: F,
    cap: usize,
) -> Result<LabeledClosure<T, L>>
where
    T: GroupElement,
    L: Clone + Eq,
    F: Fn(&L, &L) -> L,
{
    assert_eq!(generators.len(), generator_labels.len());
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let mut elements = vec![identity.clone()];
    let mut labels = vec![identity_label];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut consistent = true;
    while let Some(cur) = queue.pop_front() {
        for (s, s_label) in generators.iter().zip(generator_labels) {
            let next = elements[cur].op(s);
            let next_label = compose(&labels[cur], s_label);
            match index.get(&next) {
                Some(&j) => {
                    if labels[j] != next_label {
                        consistent = false;
                    }
                }
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                    labels.push(next_label);
                }
            }
        }
    }
    let gen_idx = generators
        .iter()
        .map(|s| {
            // a generator equal to the identity is never pushed by the loop
            index.get(s).copied().expect("generator lies in its closure")
        })
        .collect();
    drop(index);
    Ok(LabeledClosure { group: FiniteGroupRecord::from_elements(elements, gen_idx), labels, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::generators_rho;

    #[test]
    fn one_qubit_real_pauli_group_is_dihedral() {
        let g = closure(PauliString::identity(1), &[PauliString::x_on(1, 1), PauliString::z_on(1, 1)], DEFAULT_CAP)
            .unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.order_histogram(), &BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        assert_eq!(g.center_type(), CenterType::Z2);
        assert_eq!(g.cyclic_order4_subgroups(), 1);
    }

    #[test]
    fn rho_images_give_quaternions() {
        let g = closure(PauliString::identity(1), &generators_rho(1), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.order_histogram(), &BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(g.cyclic_order4_subgroups(), 3);
    }

    #[test]
    fn empty_generators() {
        let g = closure(PauliString::identity(2), &[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.center_type(), CenterType::Trivial);
    }

    #[test]
    fn cap_is_enforced() {
        let err = closure(PauliString::identity(1), &generators_rho(1), 5).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 5 });
        assert!(err.to_string().contains('5'));
    }

    #[test]
    fn labels_track_products() {
        // Z8 generated by ζ8 with labels in Z/8 is consistent
        let c = closure_labeled(CycScalar::one(), &[CycScalar::zeta(1)], 0u8, &[1u8], |a, b| (a + b) % 8, 100)
            .unwrap();
        assert_eq!(c.group.order(), 8);
        assert!(c.consistent);
        // labels mod 3 are not a homomorphism from Z8
        let c = closure_labeled(CycScalar::one(), &[CycScalar::zeta(1)], 0u8, &[1u8], |a, b| (a + b) % 3, 100)
            .unwrap();
        assert!(!c.consistent);
    }

    #[test]
    fn center_type_serde() {
        for c in [CenterType::Trivial, CenterType::Z2, CenterType::Z4, CenterType::Z2xZ2, CenterType::Other(8)] {
            let s = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<CenterType>(&s).unwrap(), c);
        }
    }
}
