//! Phase-tracked Pauli strings on `k` qubits and the concrete generator
//! images used throughout the crate.
//!
//! A [`PauliString`] denotes `ζ8^p · ⊗_j X^{x_j} Z^{z_j}` with the X factor to
//! the left of the Z factor on every qubit. With that convention
//! `Y = ZX = −XZ` is stored as `p = 4, x = 1, z = 1`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycScalar;
use crate::egroup::Nu;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub const MAX_QUBITS: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PauliString {
    k: usize,
    p: u8,
    x: u64,
    z: u64,
}

/// Mask bit of qubit `j` (1-based) among `k`; qubit 1 is the most significant.
pub fn qubit_bit(k: usize, j: usize) -> u64 {
    debug_assert!(j >= 1 && j <= k);
    1u64 << (k - j)
}

impl PauliString {
    pub fn new(k: usize, p: u8, x: u64, z: u64) -> Result<Self> {
        if k > MAX_QUBITS {
            return Err(Error::InvalidParameter(format!("at most {MAX_QUBITS} qubits, got {k}")));
        }
        let limit = 1u64 << k;
        if x >= limit || z >= limit {
            return Err(Error::InvalidParameter(format!("mask wider than {k} qubits")));
        }
        Ok(PauliString { k, p: p % 8, x, z })
    }

    pub fn identity(k: usize) -> Self {
        PauliString { k, p: 0, x: 0, z: 0 }
    }

    /// The scalar ζ8^p on `k` qubits.
    pub fn phase_only(k: usize, p: u8) -> Self {
        PauliString { k, p: p % 8, x: 0, z: 0 }
    }

    pub fn x_on(k: usize, j: usize) -> Self {
        PauliString { k, p: 0, x: qubit_bit(k, j), z: 0 }
    }

    pub fn z_on(k: usize, j: usize) -> Self {
        PauliString { k, p: 0, x: 0, z: qubit_bit(k, j) }
    }

    /// `Y_j = Z_j X_j`.
    pub fn y_on(k: usize, j: usize) -> Self {
        let b = qubit_bit(k, j);
        PauliString { k, p: 4, x: b, z: b }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn phase(&self) -> u8 {
        self.p
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    /// Multiplies the global phase by ζ8^dp.
    pub fn times_phase(&self, dp: u8) -> Self {
        PauliString { p: (self.p + dp) % 8, ..*self }
    }

    pub fn is_identity(&self) -> bool {
        self.p == 0 && self.x == 0 && self.z == 0
    }

    /// True when the operator part is trivial (a pure phase).
    pub fn is_scalar(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Exact product `self · other`.
    pub fn checked_mul(&self, other: &PauliString) -> Result<PauliString> {
        if self.k != other.k {
            return Err(Error::WidthMismatch { left: self.k, right: other.k });
        }
        // moving other's X factors left past self's Z factors
        let swaps = (self.z & other.x).count_ones() as u8 & 1;
        Ok(PauliString {
            k: self.k,
            p: (self.p + other.p + 4 * swaps) % 8,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        })
    }

    pub fn inverse(&self) -> PauliString {
        let swaps = (self.z & self.x).count_ones() as u8 & 1;
        PauliString { p: (16 - self.p - 4 * swaps) % 8, ..*self }
    }

    /// Least `m ≥ 1` with `self^m` the identity string; always 1, 2, 4 or 8.
    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut m = 1;
        while !acc.is_identity() {
            acc = acc * *self;
            m += 1;
        }
        m
    }

    /// +1 when the two strings commute, −1 when they anticommute.
    pub fn commutator_sign(&self, other: &PauliString) -> i8 {
        let s = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        if s.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        let dim = 1usize << self.k;
        let mut m = ExactMatrix::zeros(dim);
        for col in 0..dim {
            let row = col ^ self.x as usize;
            let flip = (self.z & col as u64).count_ones() % 2;
            m.set(row, col, CycScalar::zeta(self.p as i64 + 4 * flip as i64));
        }
        m
    }
}

impl Mul for PauliString {
    type Output = PauliString;

    fn mul(self, rhs: PauliString) -> PauliString {
        self.checked_mul(&rhs).expect("Pauli strings on the same number of qubits")
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phase = match self.p {
            0 => None,
            2 => Some("i".to_string()),
            4 => Some("-1".to_string()),
            6 => Some("-i".to_string()),
            p => Some(format!("ζ8^{p}")),
        };
        let mut ops = Vec::new();
        for j in 1..=self.k {
            let b = qubit_bit(self.k, j);
            if self.x & b != 0 {
                ops.push(format!("X{j}"));
            }
            if self.z & b != 0 {
                ops.push(format!("Z{j}"));
            }
        }
        let ops = if ops.is_empty() { "I".to_string() } else { ops.join(" ") };
        match phase {
            Some(ph) => write!(f, "{ph} · {ops}"),
            None => f.write_str(&ops),
        }
    }
}

/// Sign choice for the extra generator of the odd-`n` representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LambdaBranch {
    /// `λ1(e_{2k+1}) = +i Z_k`
    One,
    /// `λ2(e_{2k+1}) = −i Z_k`
    Two,
}

/// Images of `e_1 … e_{2k}` under ρ: `ρ(e_1) = iZ_1`,
/// `ρ(e_{2i−1}) = iZ_{i−1}Z_i` for `i ≥ 2`, `ρ(e_{2i}) = Y_i`.
pub fn generators_rho(k: usize) -> Vec<PauliString> {
    assert!((1..=MAX_QUBITS).contains(&k), "rho needs 1..={MAX_QUBITS} qubits");
    let mut gens = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let mut z = qubit_bit(k, i);
        if i >= 2 {
            z |= qubit_bit(k, i - 1);
        }
        gens.push(PauliString { k, p: 2, x: 0, z });
        gens.push(PauliString::y_on(k, i));
    }
    gens
}

/// ρ's images extended by `λ(e_{2k+1}) = ±i Z_k`.
pub fn generators_lambda(k: usize, branch: LambdaBranch) -> Vec<PauliString> {
    let mut gens = generators_rho(k);
    let p = match branch {
        LambdaBranch::One => 2,
        LambdaBranch::Two => 6,
    };
    gens.push(PauliString { k, p, x: 0, z: qubit_bit(k, k) });
    gens
}

/// `X_1 … X_k, Z_1 … Z_k`, followed by the central `i` when `complex`.
pub fn generators_pauli(k: usize, complex: bool) -> Vec<PauliString> {
    let mut gens: Vec<PauliString> = (1..=k).map(|j| PauliString::x_on(k, j)).collect();
    gens.extend((1..=k).map(|j| PauliString::z_on(k, j)));
    if complex {
        gens.push(PauliString::phase_only(k, 2));
    }
    gens
}

/// Multiplies every generator by `i`; turns an `E^{-1}` image into an `E^{+1}` one.
pub fn rescale_by_i(gens: &[PauliString]) -> Vec<PauliString> {
    gens.iter().map(|g| g.times_phase(2)).collect()
}

/// The unsigned Pauli error basis: every tensor product of `{I, X, Y, Z}`
/// with `Y = ZX`, in lexicographic order of the per-qubit letters.
pub fn pauli_error_basis(k: usize) -> Vec<PauliString> {
    let mut out = Vec::with_capacity(1 << (2 * k));
    for code in 0..(1u64 << (2 * k)) {
        let (mut x, mut z, mut ys) = (0u64, 0u64, 0u32);
        for j in 1..=k {
            let letter = (code >> (2 * (k - j))) & 3;
            let b = qubit_bit(k, j);
            match letter {
                1 => x |= b,
                2 => {
                    x |= b;
                    z |= b;
                    ys += 1;
                }
                3 => z |= b,
                _ => {}
            }
        }
        out.push(PauliString { k, p: if ys % 2 == 1 { 4 } else { 0 }, x, z });
    }
    out
}

/// Checks the defining relations of `E^ν_n` on generator images:
/// `g_i² = ν`, adjacent generators anticommute, distant ones commute.
pub fn check_e_relations(gens: &[PauliString], nu: Nu) -> std::result::Result<(), String> {
    let Some(k) = gens.first().map(|g| g.k) else {
        return Ok(());
    };
    if let Some(g) = gens.iter().find(|g| g.k != k) {
        return Err(format!("mixed qubit counts {k} and {}", g.k));
    }
    let nu_string = PauliString::phase_only(k, if nu == Nu::Minus { 4 } else { 0 });
    for (i, g) in gens.iter().enumerate() {
        if *g * *g != nu_string {
            return Err(format!("generator {} squares to {}, expected {}", i + 1, *g * *g, nu_string));
        }
        for (j, h) in gens.iter().enumerate().skip(i + 1) {
            let expected = if j == i + 1 { -1 } else { 1 };
            if g.commutator_sign(h) != expected {
                return Err(format!(
                    "generators {} and {} should {}",
                    i + 1,
                    j + 1,
                    if expected == 1 { "commute" } else { "anticommute" }
                ));
            }
        }
    }
    Ok(())
}

/// One identity checked by [`pauli_from_e`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub statement: String,
    pub holds: bool,
}

/// Checks that the real Pauli generators are recovered from ρ's images:
/// `Y_i = ρ(e_{2i})`, `Z_i = (−i)^i ρ(e_1)ρ(e_3)⋯ρ(e_{2i−1})` and
/// `X_i = Z_i Y_i = (−i)^i ρ(e_1)ρ(e_3)⋯ρ(e_{2i−1})ρ(e_{2i})`.
pub fn pauli_from_e(k: usize) -> Vec<IdentityCheck> {
    let rho = generators_rho(k);
    let mut checks = Vec::new();
    for i in 1..=k {
        let y = PauliString::y_on(k, i);
        let z = PauliString::z_on(k, i);
        let x = PauliString::x_on(k, i);
        checks.push(IdentityCheck { statement: format!("Y{i} = rho(e{})", 2 * i), holds: y == rho[2 * i - 1] });

        // (−i)^i = ζ8^(6i)
        let odd_product = (1..=i)
            .map(|j| rho[2 * j - 2])
            .fold(PauliString::phase_only(k, ((6 * i) % 8) as u8), |acc, g| acc * g);
        checks.push(IdentityCheck {
            statement: format!("Z{i} = (-i)^{i} rho(e1)rho(e3)...rho(e{})", 2 * i - 1),
            holds: z == odd_product,
        });
        checks.push(IdentityCheck { statement: format!("X{i} = Z{i} Y{i}"), holds: x == z * y });
        checks.push(IdentityCheck {
            statement: format!("X{i} = (-i)^{i} rho(e1)rho(e3)...rho(e{})rho(e{})", 2 * i - 1, 2 * i),
            holds: x == odd_product * rho[2 * i - 1],
        });
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1() -> PauliString {
        PauliString::x_on(1, 1)
    }

    fn z1() -> PauliString {
        PauliString::z_on(1, 1)
    }

    #[test]
    fn z_times_x_is_y() {
        let y = z1() * x1();
        assert_eq!((y.phase(), y.x_mask(), y.z_mask()), (4, 1, 1));
        let expected = ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]).unwrap();
        assert_eq!(y.to_matrix(), expected);
        assert_eq!(y, PauliString::y_on(1, 1));
    }

    #[test]
    fn involutions_and_squares() {
        assert!((x1() * x1()).is_identity());
        let iz = z1().times_phase(2);
        assert_eq!(iz * iz, PauliString::phase_only(1, 4));
    }

    #[test]
    fn orders() {
        assert_eq!(PauliString::identity(2).order(), 1);
        assert_eq!(PauliString::phase_only(2, 4).order(), 2);
        assert_eq!(z1().times_phase(2).order(), 4);
        assert_eq!(PauliString::phase_only(1, 1).order(), 8);
    }

    #[test]
    fn commutation_signs() {
        assert_eq!(x1().commutator_sign(&z1()), -1);
        let (x_1, z_2) = (PauliString::x_on(2, 1), PauliString::z_on(2, 2));
        assert_eq!(x_1.commutator_sign(&z_2), 1);
        assert_eq!(x1().commutator_sign(&PauliString::identity(1)), 1);
    }

    #[test]
    fn matrices_of_x_and_z() {
        assert_eq!(x1().to_matrix(), ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap());
        assert_eq!(z1().to_matrix(), ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]).unwrap());
    }

    #[test]
    fn width_mismatch() {
        assert!(matches!(
            x1().checked_mul(&PauliString::identity(2)),
            Err(Error::WidthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn inverse_is_two_sided() {
        for p in 0..8 {
            for x in 0..4 {
                for z in 0..4 {
                    let g = PauliString::new(2, p, x, z).unwrap();
                    assert!((g * g.inverse()).is_identity());
                    assert!((g.inverse() * g).is_identity());
                }
            }
        }
    }

    #[test]
    fn rho_images() {
        let g = generators_rho(1);
        assert_eq!(g, vec![z1().times_phase(2), PauliString::y_on(1, 1)]);
        let g2 = generators_rho(2);
        let iz1z2 = (PauliString::z_on(2, 1) * PauliString::z_on(2, 2)).times_phase(2);
        assert_eq!(g2[2], iz1z2);
        for k in 1..=4 {
            check_e_relations(&generators_rho(k), Nu::Minus).unwrap();
        }
    }

    #[test]
    fn lambda_images() {
        let l1 = generators_lambda(1, LambdaBranch::One);
        assert_eq!(l1, vec![z1().times_phase(2), PauliString::y_on(1, 1), z1().times_phase(2)]);
        let l2 = generators_lambda(1, LambdaBranch::Two);
        assert_eq!(l2[2], z1().times_phase(6));
        for k in 1..=3 {
            for b in [LambdaBranch::One, LambdaBranch::Two] {
                check_e_relations(&generators_lambda(k, b), Nu::Minus).unwrap();
            }
        }
    }

    #[test]
    fn pauli_generators() {
        let g = generators_pauli(2, false);
        assert_eq!(
            g,
            vec![
                PauliString::x_on(2, 1),
                PauliString::x_on(2, 2),
                PauliString::z_on(2, 1),
                PauliString::z_on(2, 2)
            ]
        );
        for a in &g {
            assert!((*a * *a).is_identity());
        }
        assert_eq!(g[0].commutator_sign(&g[2]), -1);
        assert_eq!(g[0].commutator_sign(&g[3]), 1);
        let c = generators_pauli(2, true);
        let i = *c.last().unwrap();
        assert_eq!(i.order(), 4);
        assert!(c.iter().all(|g| g.commutator_sign(&i) == 1));
    }

    #[test]
    fn rescaling() {
        let g = rescale_by_i(&[z1().times_phase(2)])[0];
        assert_eq!(g, z1().times_phase(4));
        assert!((g * g).is_identity());
        for k in 1..=3 {
            check_e_relations(&rescale_by_i(&generators_rho(k)), Nu::Plus).unwrap();
        }
        let rho = generators_rho(2);
        let twice = rescale_by_i(&rescale_by_i(&rho));
        for (a, b) in twice.iter().zip(&rho) {
            assert_eq!(*a, b.times_phase(4));
        }
    }

    #[test]
    fn bases_translation() {
        for k in 1..=4 {
            let checks = pauli_from_e(k);
            assert_eq!(checks.len(), 4 * k);
            assert!(checks.iter().all(|c| c.holds), "{checks:?}");
        }
    }

    #[test]
    fn error_basis_is_unsigned_products() {
        let b = pauli_error_basis(1);
        assert_eq!(b, vec![PauliString::identity(1), x1(), PauliString::y_on(1, 1), z1()]);
        assert_eq!(pauli_error_basis(3).len(), 64);
    }

    #[test]
    fn rendering() {
        let g = (PauliString::x_on(2, 1) * PauliString::z_on(2, 1) * PauliString::z_on(2, 2)).times_phase(6);
        assert_eq!(g.to_string(), "-i · X1 Z1 Z2");
        assert_eq!(PauliString::identity(3).to_string(), "I");
        let v = serde_json::to_value(PauliString::y_on(1, 1)).unwrap();
        assert_eq!(v, serde_json::json!({"k": 1, "p": 4, "x": 1, "z": 1}));
    }
}
