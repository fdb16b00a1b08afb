use serde::Serialize;
use serde_json::Value;

use super::{Elem, Side, Sijection};
use crate::error::Result;
use crate::perm::Sign;

/// Which of the three sets of a composition an element sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Source,
    Middle,
    Target,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub element: Value,
    pub set: Region,
    pub sign: Sign,
    /// Nesting level of the composition that recorded the step; `0` is outermost.
    pub depth: usize,
}

/// Per-call buffer of orbit steps.
#[derive(Debug, Clone, Default)]
pub struct Trace {
    enabled: bool,
    depth: usize,
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn disabled() -> Self {
        Trace::default()
    }

    pub fn enabled() -> Self {
        Trace {
            enabled: true,
            ..Trace::default()
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.enabled
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<TraceStep> {
        self.steps
    }

    pub fn record<T: Serialize>(&mut self, set: Region, sign: Sign, element: &T) {
        if self.enabled {
            self.steps.push(TraceStep {
                element: serde_json::to_value(element).unwrap_or(Value::Null),
                set,
                sign,
                depth: self.depth,
            });
        }
    }

    /// Runs `f` one nesting level deeper.
    pub fn nested<R>(&mut self, f: impl FnOnce(&mut Trace) -> R) -> R {
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }
}

/// `{"input": …, "steps": […], "output": …}`; the steps run from the input
/// to the output inclusive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitTrace {
    pub input: Value,
    pub steps: Vec<TraceStep>,
    pub output: Value,
}

impl OrbitTrace {
    /// Steps recorded by the outermost composition.
    pub fn top_level(&self) -> impl Iterator<Item = &TraceStep> {
        self.steps.iter().filter(|s| s.depth == 0)
    }
}

fn record_end<P: Sijection>(p: &P, trace: &mut Trace, x: &Elem<P>) -> Value {
    let sign = p.sign_of(x);
    match x {
        Side::Source(a) => {
            trace.record(Region::Source, sign, a);
            serde_json::to_value(a).unwrap_or(Value::Null)
        }
        Side::Target(b) => {
            trace.record(Region::Target, sign, b);
            serde_json::to_value(b).unwrap_or(Value::Null)
        }
    }
}

pub(super) fn run_traced<P: Sijection>(
    p: &P,
    x: Elem<P>,
    forward: bool,
) -> Result<(Elem<P>, OrbitTrace)> {
    let mut trace = Trace::enabled();
    let input = record_end(p, &mut trace, &x);
    let y = if forward {
        p.forward_traced(x, &mut trace)?
    } else {
        p.backward_traced(x, &mut trace)?
    };
    let output = record_end(p, &mut trace, &y);
    Ok((
        y,
        OrbitTrace {
            input,
            steps: trace.into_steps(),
            output,
        },
    ))
}
