//! Verification suites with JSON reports.

mod report;
mod suites;
mod sweep;

pub use report::{Check, Instance, StatisticReport};
pub use suites::{verify_lgv, verify_schur, verify_theorem1};
pub use sweep::{sweep, Outcome, SweepReport, SweepRow};
