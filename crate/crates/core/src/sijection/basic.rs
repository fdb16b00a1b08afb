use std::collections::HashSet;
use std::fmt::{self, Debug};
use std::hash::Hash;

use serde::Serialize;

use super::{Elem, ItemOf, Side, SignedSet, Sijection, Trace};
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::perm::Sign;

/// Explicitly listed signed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSignedSet<T> {
    plus: Vec<T>,
    minus: Vec<T>,
}

impl<T: Clone + Eq + Hash + Debug> FiniteSignedSet<T> {
    pub fn new(plus: Vec<T>, minus: Vec<T>) -> Result<Self> {
        let mut seen = HashSet::new();
        for x in plus.iter().chain(&minus) {
            if !seen.insert(x) {
                return Err(Error::Sijection(format!("{x:?} listed twice")));
            }
        }
        Ok(FiniteSignedSet { plus, minus })
    }

    pub fn positive(plus: Vec<T>) -> Result<Self> {
        Self::new(plus, Vec::new())
    }
}

impl<T: Clone + Eq + Hash + Debug + Serialize> SignedSet for FiniteSignedSet<T> {
    type Item = T;

    fn sign(&self, item: &T) -> Sign {
        if self.minus.contains(item) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    fn contains(&self, item: &T) -> bool {
        self.plus.contains(item) || self.minus.contains(item)
    }

    fn size_bound(&self) -> u128 {
        (self.plus.len() + self.minus.len()) as u128
    }

    fn elements(&self, guard: &Guard) -> Result<Vec<T>> {
        guard.check("signed set", self.size_bound())?;
        Ok(self.plus.iter().chain(&self.minus).cloned().collect())
    }
}

type ElemFn<S, T> =
    Box<dyn Fn(Side<ItemOf<S>, ItemOf<T>>) -> Result<Side<ItemOf<S>, ItemOf<T>>> + Send + Sync>;

/// Sijection given by two arbitrary closures, one per direction.
///
/// Nothing is checked at construction; [`super::check_sijection`] validates it.
pub struct FnSijection<S: SignedSet, T: SignedSet> {
    source: S,
    target: T,
    forward: ElemFn<S, T>,
    backward: ElemFn<S, T>,
}

impl<S: SignedSet, T: SignedSet> FnSijection<S, T> {
    pub fn new(
        source: S,
        target: T,
        forward: impl Fn(Side<S::Item, T::Item>) -> Result<Side<S::Item, T::Item>>
            + Send
            + Sync
            + 'static,
        backward: impl Fn(Side<S::Item, T::Item>) -> Result<Side<S::Item, T::Item>>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        FnSijection {
            source,
            target,
            forward: Box::new(forward),
            backward: Box::new(backward),
        }
    }
}

impl<S: SignedSet, T: SignedSet> Debug for FnSijection<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnSijection")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl<S: SignedSet, T: SignedSet> Sijection for FnSijection<S, T> {
    type Source = S;
    type Target = T;

    fn source(&self) -> &S {
        &self.source
    }

    fn target(&self) -> &T {
        &self.target
    }

    fn forward_traced(&self, x: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        (self.forward)(x)
    }

    fn backward_traced(&self, y: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        (self.backward)(y)
    }
}

type MapFn<A, B> = Box<dyn Fn(&A) -> Result<B> + Send + Sync>;

/// A sign-preserving bijection `f : S -> T` viewed as a sijection: `S⁺ -> T⁺`
/// by `f` and `T⁻ -> S⁻` by `f⁻¹`.
pub struct SignPreserving<S: SignedSet, T: SignedSet> {
    source: S,
    target: T,
    map: MapFn<S::Item, T::Item>,
    inverse: MapFn<T::Item, S::Item>,
}

impl<S: SignedSet, T: SignedSet> SignPreserving<S, T> {
    pub fn new(
        source: S,
        target: T,
        map: impl Fn(&S::Item) -> Result<T::Item> + Send + Sync + 'static,
        inverse: impl Fn(&T::Item) -> Result<S::Item> + Send + Sync + 'static,
    ) -> Self {
        SignPreserving {
            source,
            target,
            map: Box::new(map),
            inverse: Box::new(inverse),
        }
    }
}

impl<S: SignedSet + Clone> SignPreserving<S, S> {
    pub fn identity(set: S) -> Self {
        Self::new(set.clone(), set, |x| Ok(x.clone()), |x| Ok(x.clone()))
    }
}

impl<S: SignedSet, T: SignedSet> Debug for SignPreserving<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignPreserving")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl<S: SignedSet, T: SignedSet> Sijection for SignPreserving<S, T> {
    type Source = S;
    type Target = T;

    fn source(&self) -> &S {
        &self.source
    }

    fn target(&self) -> &T {
        &self.target
    }

    fn forward_traced(&self, x: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        Ok(match x {
            Side::Source(s) => Side::Target((self.map)(&s)?),
            Side::Target(t) => Side::Source((self.inverse)(&t)?),
        })
    }

    fn backward_traced(&self, y: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        // Same formulas: on S⁻ ⊔ T⁺ the map still sends S to T and T to S.
        self.forward_traced(y, &mut Trace::disabled())
    }
}

/// The inverse sijection `T => S` of `P : S => T`.
#[derive(Debug, Clone)]
pub struct Inverse<P>(P);

impl<P: Sijection> Inverse<P> {
    pub fn new(p: P) -> Self {
        Inverse(p)
    }

    pub fn inner(&self) -> &P {
        &self.0
    }
}

impl<P: Sijection> Sijection for Inverse<P> {
    type Source = P::Target;
    type Target = P::Source;

    fn source(&self) -> &P::Target {
        self.0.target()
    }

    fn target(&self) -> &P::Source {
        self.0.source()
    }

    fn forward_traced(&self, x: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        Ok(self.0.backward_traced(x.swap(), trace)?.swap())
    }

    fn backward_traced(&self, y: Elem<Self>, trace: &mut Trace) -> Result<Elem<Self>> {
        Ok(self.0.forward_traced(y.swap(), trace)?.swap())
    }
}
