use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::report::describe;
use super::{verify_lgv, verify_theorem1, Instance, StatisticReport};
use crate::error::Result;
use crate::guard::Guard;
use crate::objects::enumerate_partitions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    fn of(r: &Result<StatisticReport>) -> Self {
        match r {
            Ok(r) if r.passed() => Outcome::Pass,
            Ok(_) => Outcome::Fail,
            Err(_) => Outcome::Error,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub instance: Instance,
    pub theorem1: Outcome,
    pub lgv: Outcome,
    /// Failed checks and errors, as `"suite: name"` lines.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub command: &'static str,
    pub max_cells: usize,
    pub max_bound: usize,
    pub instances: usize,
    pub passed: bool,
    pub rows: Vec<SweepRow>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SweepReport {
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            s.push_str(&format!(
                "{:<16} theorem1={:?} lgv={:?}\n",
                describe(&row.instance),
                row.theorem1,
                row.lgv
            ));
            for p in &row.problems {
                s.push_str(&format!("  {p}\n"));
            }
        }
        s.push_str(&format!(
            "{} instances, {} in {} ms\n",
            self.instances,
            if self.passed { "all pass" } else { "FAILURES" },
            self.runtime.as_millis()
        ));
        s
    }
}

fn problems(suite: &str, r: &Result<StatisticReport>) -> Vec<String> {
    match r {
        Ok(r) => r
            .failures()
            .map(|c| format!("{suite}: {}", c.name))
            .collect(),
        Err(e) => vec![format!("{suite}: {e}")],
    }
}

/// Both suites on every `λ` with `|λ| <= max_cells` and `m <= max_bound`,
/// evaluated in parallel; rows come back sorted by size, then shape, then `m`.
pub fn sweep(max_cells: usize, max_bound: usize, guard: &Guard) -> SweepReport {
    let clock = Instant::now();
    let instances: Vec<_> = enumerate_partitions(max_cells)
        .flat_map(|shape| (0..=max_bound).map(move |m| (shape.clone(), m)))
        .collect();
    let rows: Vec<SweepRow> = instances
        .into_par_iter()
        .map(|(shape, m)| {
            let t = verify_theorem1(&shape, m, guard);
            let l = verify_lgv(&shape, m, guard);
            let mut issues = problems("theorem1", &t);
            issues.extend(problems("lgv", &l));
            SweepRow {
                instance: Instance::bounded(shape, m),
                theorem1: Outcome::of(&t),
                lgv: Outcome::of(&l),
                problems: issues,
            }
        })
        .collect();
    SweepReport {
        command: "sweep",
        max_cells,
        max_bound,
        instances: rows.len(),
        passed: rows
            .iter()
            .all(|r| r.theorem1 == Outcome::Pass && r.lgv == Outcome::Pass),
        rows,
        runtime: clock.elapsed(),
    }
}
