//! The groups `E^ν_n` in normal form, independent of any representation.
//!
//! `E^ν_n` is generated by `e_1 … e_n` with `e_i² = ν`, `e_i e_{i+1} =
//! −e_{i+1} e_i` and `e_i e_j = e_j e_i` for `|i − j| ≥ 2`, where `ν = ±1` is
//! central. Every element has a unique normal form `(−1)^s e_1^{a_1}⋯e_n^{a_n}`,
//! so the group has exactly `2^{n+1}` elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{CenterType, FiniteGroupRecord, GroupElement};
use crate::par;
use crate::pauli::{check_e_relations, PauliString};

/// Largest generator count the bit-mask normal form supports.
pub const MAX_GENERATORS: usize = 31;
/// Default bound on `n` for exhaustive enumeration (2^21 elements).
pub const DEFAULT_MAX_N: usize = 20;

/// The value of every generator square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nu {
    Plus,
    Minus,
}

impl Nu {
    pub fn as_i8(self) -> i8 {
        match self {
            Nu::Plus => 1,
            Nu::Minus => -1,
        }
    }

    /// `ν^m`.
    pub fn pow(self, m: usize) -> Nu {
        if self == Nu::Minus && m % 2 == 1 {
            Nu::Minus
        } else {
            Nu::Plus
        }
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

impl FromStr for Nu {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" => Ok(Nu::Plus),
            "-1" => Ok(Nu::Minus),
            other => Err(Error::InvalidParameter(format!("nu must be 1 or -1, got {other:?}"))),
        }
    }
}

impl Serialize for Nu {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Nu {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Nu::Plus),
            -1 => Ok(Nu::Minus),
            v => Err(serde::de::Error::custom(format!("nu must be 1 or -1, got {v}"))),
        }
    }
}

/// `(−1)^sign · e_1^{a_1}⋯e_n^{a_n}` with bit `i − 1` of `mask` holding `a_i`.
///
/// The derived order compares `mask` before `sign`; coset representatives
/// are the minima under it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EElement {
    n: u8,
    nu: Nu,
    mask: u32,
    sign: bool,
}

impl EElement {
    pub fn new(n: usize, nu: Nu, sign: bool, mask: u32) -> Result<Self> {
        if n == 0 || n > MAX_GENERATORS {
            return Err(Error::InvalidParameter(format!("generator count must be in 1..={MAX_GENERATORS}, got {n}")));
        }
        if (mask as u64) >> n != 0 {
            return Err(Error::InvalidParameter(format!("mask {mask:#b} uses more than {n} generators")));
        }
        Ok(EElement { n: n as u8, nu, mask, sign })
    }

    pub fn identity(n: usize, nu: Nu) -> Self {
        Self::new(n, nu, false, 0).expect("valid generator count")
    }

    pub fn minus_one(n: usize, nu: Nu) -> Self {
        Self::new(n, nu, true, 0).expect("valid generator count")
    }

    /// The generator `e_i`, `1 ≤ i ≤ n`.
    pub fn generator(n: usize, nu: Nu, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of 1..={n}");
        Self::new(n, nu, false, 1 << (i - 1)).expect("valid generator count")
    }

    /// Product of the listed generators, left to right.
    pub fn word(n: usize, nu: Nu, letters: &[usize]) -> Self {
        letters
            .iter()
            .fold(Self::identity(n, nu), |acc, &i| acc * Self::generator(n, nu, i))
    }

    /// `e_1 e_3 ⋯ e_m` for odd `m`.
    pub fn odd_product(n: usize, nu: Nu, m: usize) -> Self {
        let letters: Vec<usize> = (1..=m).step_by(2).collect();
        Self::word(n, nu, &letters)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn nu(&self) -> Nu {
        self.nu
    }

    pub fn sign(&self) -> bool {
        self.sign
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_identity(&self) -> bool {
        !self.sign && self.mask == 0
    }

    /// Normal form of `self · other`.
    pub fn checked_mul(&self, other: &EElement) -> Result<EElement> {
        if self.n != other.n || self.nu != other.nu {
            return Err(Error::ParameterMismatch(format!(
                "E^{}_{} vs E^{}_{}",
                self.nu, self.n, other.nu, other.n
            )));
        }
        // each e_i of `other` passes every e_j of `self` with j > i; only
        // j = i + 1 anticommutes
        let swaps = (self.mask & (other.mask << 1)).count_ones();
        let squares = if self.nu == Nu::Minus { (self.mask & other.mask).count_ones() } else { 0 };
        let flip = (swaps + squares) % 2 == 1;
        Ok(EElement { n: self.n, nu: self.nu, mask: self.mask ^ other.mask, sign: self.sign ^ other.sign ^ flip })
    }

    pub fn square(&self) -> EElement {
        *self * *self
    }

    /// Element order, always 1, 2 or 4.
    pub fn order(&self) -> u32 {
        if self.is_identity() {
            1
        } else if self.square().is_identity() {
            2
        } else {
            4
        }
    }

    /// Image `(−1)^s ρ(e_1)^{a_1}⋯ρ(e_n)^{a_n}` under generator images `rep`.
    pub fn image(&self, rep: &[PauliString]) -> PauliString {
        assert_eq!(rep.len(), self.n(), "one image per generator");
        let k = rep[0].k();
        let start = PauliString::phase_only(k, if self.sign { 4 } else { 0 });
        (0..self.n())
            .filter(|i| self.mask >> i & 1 == 1)
            .fold(start, |acc, i| acc * rep[i])
    }
}

impl Mul for EElement {
    type Output = EElement;
    fn mul(self, rhs: EElement) -> EElement {
        self.checked_mul(&rhs).expect("elements of the same group")
    }
}

impl Neg for EElement {
    type Output = EElement;
    fn neg(self) -> EElement {
        EElement { sign: !self.sign, ..self }
    }
}

impl GroupElement for EElement {
    fn op(&self, other: &Self) -> Self {
        *self * *other
    }

    fn inverse(&self) -> Self {
        if self.square().is_identity() {
            *self
        } else {
            -*self
        }
    }
}

impl fmt::Display for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign {
            f.write_str("-")?;
        }
        if self.mask == 0 {
            return f.write_str("1");
        }
        let letters: Vec<String> = (0..self.n())
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| format!("e{}", i + 1))
            .collect();
        f.write_str(&letters.join(" "))
    }
}

/// All `2^{n+1}` elements of `E^ν_n`, identity first, with `e_1 … e_n` as
/// generators. Refuses `n` above [`DEFAULT_MAX_N`].
pub fn enumerate(n: usize, nu: Nu) -> Result<FiniteGroupRecord<EElement>> {
    enumerate_capped(n, nu, 1usize << (DEFAULT_MAX_N + 1))
}

/// [`enumerate`] with an explicit element cap.
pub fn enumerate_capped(n: usize, nu: Nu, cap: usize) -> Result<FiniteGroupRecord<EElement>> {
    EElement::new(n, nu, false, 0)?;
    let order = 1u64 << (n + 1);
    if order > cap as u64 {
        return Err(Error::CapExceeded { cap });
    }
    let elements: Vec<EElement> = (0..(1u64 << n))
        .flat_map(|mask| {
            [false, true].map(|sign| EElement { n: n as u8, nu, mask: mask as u32, sign })
        })
        .collect();
    let generators = (0..n).map(|i| 2 * (1usize << i)).collect();
    Ok(FiniteGroupRecord::from_elements(elements, generators))
}

/// Center of `E^ν_n` and its isomorphism type.
pub fn center_of(n: usize, nu: Nu) -> Result<(Vec<EElement>, CenterType)> {
    let g = enumerate(n, nu)?;
    let center = g.center().iter().map(|&i| *g.element(i)).collect();
    Ok((center, g.center_type()))
}

/// Elements of `E^ν_n` mapped to the identity by the generator images `rep`.
/// Empty exactly when the representation is faithful.
pub fn rep_kernel(n: usize, nu: Nu, rep: &[PauliString]) -> Result<Vec<EElement>> {
    if rep.len() != n {
        return Err(Error::NotARepresentation(format!("{} images for {n} generators", rep.len())));
    }
    check_e_relations(rep, nu).map_err(Error::NotARepresentation)?;
    let g = enumerate(n, nu)?;
    let hits = par::map(g.elements(), |e| e.image(rep).is_identity());
    Ok(g.elements()
        .iter()
        .zip(hits)
        .filter(|(_, hit)| *hit)
        .map(|(e, _)| *e)
        .filter(|e| !e.is_identity())
        .collect())
}

/// JSON-facing summary of an enumerated `E^ν_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EGroupSummary {
    pub n: usize,
    pub nu: Nu,
    pub order: u64,
    pub order_histogram: BTreeMap<u32, usize>,
    pub center_type: CenterType,
}

pub fn summarize(n: usize, nu: Nu) -> Result<EGroupSummary> {
    let g = enumerate(n, nu)?;
    Ok(EGroupSummary {
        n,
        nu,
        order: g.order() as u64,
        order_histogram: g.order_histogram().clone(),
        center_type: g.center_type(),
    })
}
