//! South-east lattice paths on `Z^2`, path families with a connection
//! permutation, and the encodings of plane partitions and tableaux.

mod encode;
mod family;
mod path;
mod stats;

pub use encode::{pp_decode, pp_encode, ssyt_decode, ssyt_encode};
pub use family::{enumerate_families, Endpoints, FamilyJson, SignedPathFamily};
pub use path::{paths_between, Path, Point, Step};
pub use stats::{eta1, eta2, eta_labels};
