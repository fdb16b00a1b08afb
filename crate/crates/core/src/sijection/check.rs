use std::collections::{HashMap, HashSet};
use std::fmt::Debug;

use serde::Serialize;

use super::{Elem, ItemOf, Side, SignedSet, Sijection};
use crate::error::Result;
use crate::guard::Guard;
use crate::perm::Sign;

/// Named function on the elements of a signed set.
pub struct Statistic<X, V> {
    name: String,
    eval: Box<dyn Fn(&X) -> V + Send + Sync>,
}

impl<X, V> Statistic<X, V> {
    pub fn new(name: impl Into<String>, eval: impl Fn(&X) -> V + Send + Sync + 'static) -> Self {
        Statistic {
            name: name.into(),
            eval: Box::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: &X) -> V {
        (self.eval)(x)
    }
}

impl<X, V> std::fmt::Debug for Statistic<X, V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Statistic").field(&self.name).finish()
    }
}

/// First defect found while checking that an evaluator is a bijection
/// `S⁺ ⊔ T⁻ -> S⁻ ⊔ T⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation<A, B> {
    /// The evaluator returned an error.
    Failed { input: Side<A, B>, error: String },
    /// The image is not in `S⁻ ⊔ T⁺` (or, backwards, not in `S⁺ ⊔ T⁻`).
    OutsideCodomain {
        input: Side<A, B>,
        output: Side<A, B>,
    },
    /// Two inputs share an image.
    NotInjective {
        first: Side<A, B>,
        second: Side<A, B>,
        output: Side<A, B>,
    },
    /// An element of `S⁻ ⊔ T⁺` has no preimage.
    NotSurjective { missing: Side<A, B> },
    /// `backward(forward(x)) != x`.
    BackwardMismatch {
        input: Side<A, B>,
        output: Side<A, B>,
        back: Side<A, B>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SijectionReport<A, B> {
    pub domain_size: usize,
    pub codomain_size: usize,
    pub violation: Option<Violation<A, B>>,
}

impl<A, B> SijectionReport<A, B> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

type Parts<P> = (Vec<Elem<P>>, Vec<Elem<P>>);

/// [`SijectionReport`] over the element types of `P`.
pub type ReportFor<P> =
    SijectionReport<ItemOf<<P as Sijection>::Source>, ItemOf<<P as Sijection>::Target>>;

/// [`CompatibilityReport`] over the element types of `P`.
pub type CompatibilityFor<P, V> =
    CompatibilityReport<ItemOf<<P as Sijection>::Source>, ItemOf<<P as Sijection>::Target>, V>;

/// `(S⁺ ⊔ T⁻, S⁻ ⊔ T⁺)` in enumeration order.
fn split_domain<P: Sijection>(p: &P, guard: &Guard) -> Result<Parts<P>> {
    let mut domain = Vec::new();
    let mut codomain = Vec::new();
    for s in p.source().elements(guard)? {
        match p.source().sign(&s) {
            Sign::Plus => domain.push(Side::Source(s)),
            Sign::Minus => codomain.push(Side::Source(s)),
        }
    }
    for t in p.target().elements(guard)? {
        match p.target().sign(&t) {
            Sign::Minus => domain.push(Side::Target(t)),
            Sign::Plus => codomain.push(Side::Target(t)),
        }
    }
    Ok((domain, codomain))
}

/// Exhaustively checks totality, injectivity, surjectivity, and that the
/// backward evaluator inverts the forward one.
pub fn check_sijection<P: Sijection>(p: &P, guard: &Guard) -> Result<ReportFor<P>> {
    let (domain, codomain) = split_domain(p, guard)?;
    let codomain_set: HashSet<&Elem<P>> = codomain.iter().collect();
    let report = |violation| SijectionReport {
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        violation,
    };
    let mut preimage: HashMap<Elem<P>, Elem<P>> = HashMap::with_capacity(domain.len());
    for x in &domain {
        let y = match p.forward(x.clone()) {
            Ok(y) => y,
            Err(e) => {
                return Ok(report(Some(Violation::Failed {
                    input: x.clone(),
                    error: e.to_string(),
                })))
            }
        };
        if !codomain_set.contains(&y) {
            return Ok(report(Some(Violation::OutsideCodomain {
                input: x.clone(),
                output: y,
            })));
        }
        if let Some(first) = preimage.get(&y) {
            return Ok(report(Some(Violation::NotInjective {
                first: first.clone(),
                second: x.clone(),
                output: y,
            })));
        }
        match p.backward(y.clone()) {
            Ok(back) if back == *x => {}
            Ok(back) => {
                return Ok(report(Some(Violation::BackwardMismatch {
                    input: x.clone(),
                    output: y,
                    back,
                })))
            }
            Err(e) => {
                return Ok(report(Some(Violation::Failed {
                    input: y,
                    error: e.to_string(),
                })))
            }
        }
        preimage.insert(y, x.clone());
    }
    if let Some(missing) = codomain.iter().find(|y| !preimage.contains_key(*y)) {
        return Ok(report(Some(Violation::NotSurjective {
            missing: missing.clone(),
        })));
    }
    Ok(report(None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatibilityViolation<A, B, V> {
    pub input: Side<A, B>,
    pub output: Side<A, B>,
    pub input_value: V,
    pub output_value: V,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport<A, B, V> {
    pub source_statistic: String,
    pub target_statistic: String,
    pub checked: usize,
    pub violation: Option<CompatibilityViolation<A, B, V>>,
}

impl<A, B, V> CompatibilityReport<A, B, V> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `η(φ(x)) = η(x)` for every `x` in `S⁺ ⊔ T⁻` (forward) and in
/// `S⁻ ⊔ T⁺` (backward), where `η` is `eta_source` on `S` and `eta_target` on `T`.
///
/// Evaluator errors propagate; run [`check_sijection`] first for diagnostics.
pub fn check_compatibility<P, V>(
    p: &P,
    eta_source: &Statistic<ItemOf<P::Source>, V>,
    eta_target: &Statistic<ItemOf<P::Target>, V>,
    guard: &Guard,
) -> Result<CompatibilityFor<P, V>>
where
    P: Sijection,
    V: PartialEq + Debug,
{
    let (domain, codomain) = split_domain(p, guard)?;
    let eta = |x: &Elem<P>| match x {
        Side::Source(s) => eta_source.eval(s),
        Side::Target(t) => eta_target.eval(t),
    };
    let mut report = CompatibilityReport {
        source_statistic: eta_source.name().to_string(),
        target_statistic: eta_target.name().to_string(),
        checked: 0,
        violation: None,
    };
    let forward = domain.iter().map(|x| (x, true));
    let backward = codomain.iter().map(|y| (y, false));
    for (x, fwd) in forward.chain(backward) {
        let y = if fwd {
            p.forward(x.clone())?
        } else {
            p.backward(x.clone())?
        };
        let (vx, vy) = (eta(x), eta(&y));
        report.checked += 1;
        if vx != vy {
            report.violation = Some(CompatibilityViolation {
                input: x.clone(),
                output: y,
                input_value: vx,
                output_value: vy,
            });
            break;
        }
    }
    Ok(report)
}
