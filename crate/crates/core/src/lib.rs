//! Bounded plane partitions, non-intersecting lattice paths and signed bijections.
//!
//! The crate counts plane partitions of a fixed shape with entries in `[0, m]`
//! by two row statistics (rows containing `0`, rows containing `m`) and shows the
//! two distributions agree in three independent ways:
//!
//! * brute-force tallies over [`objects::enumerate_pp`],
//! * the division-free determinant of [`algebra::lgv_matrix`],
//! * the explicit bijection [`bijections::theorem1_map`], assembled from the
//!   tail-swap involution and path reversal through the Garsia–Milne
//!   composition in [`sijection`].
//!
//! The same machinery drives [`bijections::schur_symmetry_map`], which permutes
//! the weight of semistandard tableaux.

pub mod algebra;
pub mod bijections;
pub mod error;
pub mod guard;
pub mod objects;
pub mod paths;
pub mod perm;
pub mod sijection;
pub mod verify;

pub use error::{Error, Result};
pub use guard::Guard;
