//! The concrete sijections on path families and the bijections they assemble into.
//!
//! * [`tail_swap`]: the sign-reversing involution on intersecting families.
//! * [`PhiLgv`]: `NI => all families`, built from the tail swap.
//! * [`psi_reverse`] and [`dir_permute`]: sign-preserving family maps.
//! * [`Theorem1Map`] and [`SchurSymmetryMap`]: a family map conjugated by
//!   `Φ`, read back as plane partitions or tableaux.

mod composite;
mod lgv;
mod maps;
mod sets;
mod swap;

pub use composite::{
    conjugate, schur_symmetry_map, theorem1_map, Conjugated, SchurSymmetryMap, Theorem1Map,
};
pub use lgv::{phi_lgv, PhiLgv};
pub use maps::{dir_permute, dir_permute_sijection, psi_reverse, psi_sijection, FamilyMap};
pub use sets::{FamilySet, NiFamilySet};
pub use swap::{swap_certificate, tail_swap, SwapCertificate};
