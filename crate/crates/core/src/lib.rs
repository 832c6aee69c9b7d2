//! Exact computational group theory for the abstract error groups `E^ν_n`.
//!
//! The crate enumerates and classifies the groups generated by `e_1 … e_n`
//! with `e_i² = ν`, adjacent anticommutation and distant commutation; checks
//! the nice error bases of their Pauli-string representations; and builds
//! the braid group representations `(I + T_i)/√2` from those bases, all over
//! the exact ring **Z**[ζ8][1/√2].
//!
//! Modules, bottom up:
//! - [`cyclotomic`]: exact scalars.
//! - [`matrix`]: dense matrices with tensor, trace and dagger.
//! - [`pauli`]: phase-tracked Pauli strings and the representation generators.
//! - [`egroup`]: the abstract normal form of `E^ν_n`.
//! - [`group`]: generic breadth-first closure and group invariants.
//! - [`classify`]: labels, central-product decompositions, Pauli comparisons.
//! - [`nice_basis`]: nice error basis conditions and equivalence mod phase.
//! - [`braid`]: braid representations, their finite images and GHZ search.
//! - [`report`]: pass/fail claim reports shared by the CLI.

pub mod braid;
pub mod classify;
pub mod cyclotomic;
pub mod egroup;
pub mod error;
pub mod group;
pub mod matrix;
pub mod nice_basis;
pub mod par;
pub mod pauli;
pub mod report;

pub use cyclotomic::{CycInt, CycScalar};
pub use egroup::{EElement, Nu};
pub use error::{Error, Result};
pub use group::{closure, CenterType, FiniteGroupRecord, GroupElement, GroupInvariants};
pub use matrix::ExactMatrix;
pub use pauli::{LambdaBranch, PauliString};
