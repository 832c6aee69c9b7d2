//! Dense square matrices over [`CycScalar`].
//!
//! Basis index `b` in `0..2^k` reads as the bit string `b1…bk` with qubit 1 in
//! the most significant position, so the leftmost tensor factor acts on
//! qubit 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<CycScalar>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<CycScalar>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: dim * dim, right: entries.len() });
        }
        Ok(ExactMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: bad.len() });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    /// Integer matrix, convenient for tests and fixed gates.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| CycScalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        ExactMatrix { dim, entries: vec![CycScalar::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(vec![CycScalar::one(); dim])
    }

    pub fn diagonal(diag: Vec<CycScalar>) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> CycScalar {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: CycScalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let n = self.dim;
        let mut out = vec![CycScalar::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[l * n + j];
                    if !b.is_zero() {
                        out[i * n + j] = out[i * n + j] + a * b;
                    }
                }
            }
        }
        Ok(ExactMatrix { dim: n, entries: out })
    }

    /// Kronecker product with `self` as the left (more significant) factor.
    pub fn tensor(&self, other: &ExactMatrix) -> ExactMatrix {
        let (p, q) = (self.dim, other.dim);
        let n = p * q;
        let mut out = vec![CycScalar::zero(); n * n];
        for i in 0..p {
            for j in 0..p {
                let a = self.entries[i * p + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        out[(i * q + k) * n + (j * q + l)] = a * other.entries[k * q + l];
                    }
                }
            }
        }
        ExactMatrix { dim: n, entries: out }
    }

    /// Left-to-right Kronecker product of `factors`.
    pub fn tensor_all<'a>(factors: impl IntoIterator<Item = &'a ExactMatrix>) -> ExactMatrix {
        factors
            .into_iter()
            .fold(ExactMatrix::identity(1), |acc, f| acc.tensor(f))
    }

    pub fn dagger(&self) -> ExactMatrix {
        let n = self.dim;
        let mut out = vec![CycScalar::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        ExactMatrix { dim: n, entries: out }
    }

    pub fn trace(&self) -> CycScalar {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: CycScalar) -> ExactMatrix {
        ExactMatrix { dim: self.dim, entries: self.entries.iter().map(|&x| c * x).collect() }
    }

    pub fn checked_add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Returns the unit-modulus `c` with `self = c · other`, if one exists.
    ///
    /// `c` is read off the first nonzero entry of `other` and then checked on
    /// every entry.
    pub fn equal_up_to_phase(&self, other: &ExactMatrix) -> Option<CycScalar> {
        if self.dim != other.dim {
            return None;
        }
        let Some(idx) = other.entries.iter().position(|x| !x.is_zero()) else {
            return self.is_zero().then(CycScalar::one);
        };
        let c = self.entries[idx].checked_div(&other.entries[idx])?;
        if !c.is_unit_modulus() {
            return None;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| a == c * b)
            .then_some(c)
    }

    pub fn is_unitary(&self) -> bool {
        self.matmul(&self.dagger()).map(|p| p.is_identity()).unwrap_or(false)
    }

    pub fn apply(&self, state: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if state.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: state.len() });
        }
        let n = self.dim;
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !state[j].is_zero())
                    .map(|j| self.entries[i * n + j] * state[j])
                    .sum()
            })
            .collect())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycScalar]> {
        self.entries.chunks(self.dim)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on a dimension mismatch; use [`ExactMatrix::matmul`] to handle it.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_add(rhs).expect("matrix dimensions agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self + &(-rhs)
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(-CycScalar::one())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Nested arrays of scalar strings, one inner array per row.
impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for row in self.rows() {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> ExactMatrix {
        ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap()
    }

    fn z() -> ExactMatrix {
        ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]).unwrap()
    }

    fn y() -> ExactMatrix {
        ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]).unwrap()
    }

    fn i2() -> ExactMatrix {
        ExactMatrix::identity(2)
    }

    #[test]
    fn products() {
        assert_eq!(&z() * &x(), y());
        assert_eq!(&i2() * &y(), y());
        assert_eq!(&x() * &x(), i2());
        assert!(matches!(
            i2().matmul(&ExactMatrix::identity(4)),
            Err(Error::DimensionMismatch { left: 2, right: 4 })
        ));
    }

    #[test]
    fn tensor_convention() {
        let z1 = z().tensor(&i2());
        // qubit 1 is the most significant bit: |10> and |11> pick up the sign
        let expected = ExactMatrix::diagonal(
            [1, 1, -1, -1].iter().map(|&v| CycScalar::from_int(v)).collect(),
        );
        assert_eq!(z1, expected);
        assert_eq!(i2().tensor(&i2()), ExactMatrix::identity(4));
    }

    #[test]
    fn dagger_and_trace() {
        let iz = z().scale(CycScalar::i());
        assert_eq!(iz.dagger(), iz.scale(-CycScalar::one()));
        assert_eq!(x().dagger(), x());
        assert_eq!(y().dagger().dagger(), y());
        assert_eq!(ExactMatrix::identity(4).trace(), CycScalar::from_int(4));
        assert_eq!(x().tensor(&z()).trace(), CycScalar::zero());
        assert_eq!(y().trace(), CycScalar::zero());
    }

    #[test]
    fn phase_equivalence() {
        let iz = z().scale(CycScalar::i());
        assert_eq!(iz.equal_up_to_phase(&z()), Some(CycScalar::i()));
        assert_eq!(x().equal_up_to_phase(&z()), None);
        // non-unit ratio is rejected
        assert_eq!(x().scale(CycScalar::from_int(2)).equal_up_to_phase(&x()), None);
        assert_eq!(x().equal_up_to_phase(&ExactMatrix::identity(4)), None);
    }

    #[test]
    fn unitarity() {
        assert!(x().tensor(&z()).is_unitary());
        let one_plus_i = CycScalar::one() + CycScalar::i();
        assert!(!i2().scale(one_plus_i).is_unitary());
        let r = (&i2() + &z().scale(CycScalar::i())).scale(CycScalar::inv_sqrt2());
        assert!(r.is_unitary());
    }

    #[test]
    fn json_rendering() {
        let v = serde_json::to_value(y()).unwrap();
        assert_eq!(v, serde_json::json!([["0", "1"], ["-1", "0"]]));
    }

    #[test]
    fn apply_vector() {
        let s = vec![CycScalar::one(), CycScalar::zero()];
        assert_eq!(x().apply(&s).unwrap(), vec![CycScalar::zero(), CycScalar::one()]);
        assert!(x().apply(&[CycScalar::one()]).is_err());
    }
}
