use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::objects::Partition;

/// Instance a report was computed for; exactly one of `max` and `vars` is set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub shape: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vars: Option<usize>,
}

impl Instance {
    pub fn bounded(shape: Partition, max: usize) -> Self {
        Instance {
            shape,
            max: Some(max),
            vars: None,
        }
    }

    pub fn schur(shape: Partition, vars: usize) -> Self {
        Instance {
            shape,
            max: None,
            vars: Some(vars),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Replayable counterexample; present whenever `pass` is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    pub fn from_result(name: impl Into<String>, result: Result<(), Value>) -> Self {
        match result {
            Ok(()) => Check::pass(name),
            Err(w) => Check::fail(name, w),
        }
    }
}

/// Machine-readable outcome of one verification suite.
///
/// `runtime` is kept out of the JSON so reports are byte-for-byte reproducible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatisticReport {
    pub command: &'static str,
    pub instance: Instance,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl StatisticReport {
    pub(crate) fn new(command: &'static str, instance: Instance) -> Self {
        StatisticReport {
            command,
            instance,
            results: BTreeMap::new(),
            checks: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub(crate) fn result(&mut self, name: &str, value: impl Serialize) {
        self.results.insert(name.to_string(), to_value(value));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One line per check, for humans.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {}: {} ({} ms)\n",
            self.command,
            describe(&self.instance),
            if self.passed() { "PASS" } else { "FAIL" },
            self.runtime.as_millis()
        );
        for c in &self.checks {
            s.push_str(&format!(
                "  [{}] {}\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name
            ));
        }
        s
    }
}

pub(crate) fn describe(i: &Instance) -> String {
    match (i.max, i.vars) {
        (Some(m), _) => format!("λ={} m={m}", i.shape),
        (_, Some(n)) => format!("λ={} n={n}", i.shape),
        _ => format!("λ={}", i.shape),
    }
}

pub(crate) fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}
