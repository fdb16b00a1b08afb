//! Partitions, bounded plane partitions, semistandard tableaux, and brute-force
//! generating functions over them.

mod genfun;
mod partition;
mod plane_partition;
mod tableau;

pub use genfun::{estimate_pp_count, estimate_ssyt_count, genfun_brute, schur_brute, RowStatistic};
pub use partition::{enumerate_partitions, Partition, PartitionsOf};
pub use plane_partition::{
    enumerate_pp, stat_max_rows, stat_zero_rows, PlanePartition, PlanePartitions,
};
pub use tableau::{enumerate_ssyt, Tableau, Tableaux};
