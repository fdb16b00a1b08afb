//! Signed sets and sijections.
//!
//! A sijection `S => T` is a bijection `S⁺ ⊔ T⁻ -> S⁻ ⊔ T⁺`. Sijections are
//! represented by evaluators ([`Sijection::forward`] and its inverse
//! [`Sijection::backward`]) together with descriptors of the two signed sets;
//! nothing is materialised unless a checker enumerates it under a [`Guard`].
//!
//! [`Compose`] is the Garsia–Milne composition: an element bounces between
//! the two factors while it sits in the middle set, and every bounce can be
//! recorded in a [`Trace`].

mod basic;
mod check;
mod compose;
mod trace;

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

pub use basic::{FiniteSignedSet, FnSijection, Inverse, SignPreserving};
pub use check::{
    check_compatibility, check_sijection, CompatibilityFor, CompatibilityReport,
    CompatibilityViolation, ReportFor, SijectionReport, Statistic, Violation,
};
pub use compose::{compose, Compose};
pub use trace::{OrbitTrace, Region, Trace, TraceStep};

use crate::error::Result;
use crate::guard::Guard;
pub use crate::perm::Sign;

/// An element of `S ⊔ T`, tagged with the side it lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "side", content = "element", rename_all = "lowercase")]
pub enum Side<A, B> {
    Source(A),
    Target(B),
}

impl<A, B> Side<A, B> {
    pub fn swap(self) -> Side<B, A> {
        match self {
            Side::Source(a) => Side::Target(a),
            Side::Target(b) => Side::Source(b),
        }
    }

    pub fn is_source(&self) -> bool {
        matches!(self, Side::Source(_))
    }
}

/// A pair of disjoint finite sets described by a membership test and a sign.
pub trait SignedSet: PartialEq + Debug {
    type Item: Clone + Eq + Hash + Debug + Serialize;

    fn sign(&self, item: &Self::Item) -> Sign;

    fn contains(&self, item: &Self::Item) -> bool;

    /// Upper bound on the number of elements; bounds Garsia–Milne orbits.
    fn size_bound(&self) -> u128;

    /// Every element, positive and negative, in a fixed order.
    fn elements(&self, guard: &Guard) -> Result<Vec<Self::Item>>;
}

pub type ItemOf<X> = <X as SignedSet>::Item;

/// Element type on which a sijection acts.
pub type Elem<P> = Side<ItemOf<<P as Sijection>::Source>, ItemOf<<P as Sijection>::Target>>;

pub trait Sijection {
    type Source: SignedSet;
    type Target: SignedSet;

    fn source(&self) -> &Self::Source;

    fn target(&self) -> &Self::Target;

    /// `S⁺ ⊔ T⁻ -> S⁻ ⊔ T⁺`, recording intermediate elements into `trace`.
    fn forward_traced(&self, x: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>>;

    /// `S⁻ ⊔ T⁺ -> S⁺ ⊔ T⁻`, the inverse of [`Sijection::forward_traced`].
    fn backward_traced(&self, y: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>>;

    fn forward(&self, x: Elem<Self>) -> Result<Elem<Self>> {
        self.forward_traced(x, &mut Trace::disabled())
    }

    fn backward(&self, y: Elem<Self>) -> Result<Elem<Self>> {
        self.backward_traced(y, &mut Trace::disabled())
    }

    /// Sign of an element of `S ⊔ T`.
    fn sign_of(&self, x: &Elem<Self>) -> Sign {
        match x {
            Side::Source(a) => self.source().sign(a),
            Side::Target(b) => self.target().sign(b),
        }
    }

    /// Whether `x` lies in `S⁺ ⊔ T⁻`.
    fn in_domain(&self, x: &Elem<Self>) -> bool {
        match x {
            Side::Source(a) => self.source().contains(a) && self.source().sign(a) == Sign::Plus,
            Side::Target(b) => self.target().contains(b) && self.target().sign(b) == Sign::Minus,
        }
    }

    /// Whether `y` lies in `S⁻ ⊔ T⁺`.
    fn in_codomain(&self, y: &Elem<Self>) -> bool {
        match y {
            Side::Source(a) => self.source().contains(a) && self.source().sign(a) == Sign::Minus,
            Side::Target(b) => self.target().contains(b) && self.target().sign(b) == Sign::Plus,
        }
    }

    /// Forward evaluation with the orbit recorded.
    fn forward_with_trace(&self, x: Elem<Self>) -> Result<(Elem<Self>, OrbitTrace)>
    where
        Self: Sized,
    {
        trace::run_traced(self, x, true)
    }

    /// Backward evaluation with the orbit recorded.
    fn backward_with_trace(&self, y: Elem<Self>) -> Result<(Elem<Self>, OrbitTrace)>
    where
        Self: Sized,
    {
        trace::run_traced(self, y, false)
    }
}

impl<P: Sijection + ?Sized> Sijection for &P {
    type Source = P::Source;
    type Target = P::Target;

    fn source(&self) -> &Self::Source {
        (**self).source()
    }

    fn target(&self) -> &Self::Target {
        (**self).target()
    }

    fn forward_traced(&self, x: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        (**self).forward_traced(x, trace)
    }

    fn backward_traced(&self, y: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        (**self).backward_traced(y, trace)
    }
}
