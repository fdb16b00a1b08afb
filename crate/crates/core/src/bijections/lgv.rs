use std::sync::Arc;

use super::{tail_swap, FamilySet, NiFamilySet};
use crate::error::{Error, Result};
use crate::paths::{Endpoints, SignedPathFamily};
use crate::perm::Sign;
use crate::sijection::{Elem, Side, Sijection, Trace};

/// `Φ : NI(a, b) => P(a, b)`: vertex-disjoint families map to themselves and
/// intersecting families are paired by [`tail_swap`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiLgv {
    ni: NiFamilySet,
    all: FamilySet,
}

pub fn phi_lgv(endpoints: Arc<Endpoints>) -> PhiLgv {
    PhiLgv {
        ni: NiFamilySet::new(endpoints.clone()),
        all: FamilySet::new(endpoints),
    }
}

impl PhiLgv {
    pub fn endpoints(&self) -> &Arc<Endpoints> {
        self.all.endpoints()
    }

    /// Shared by both directions: `want` is the sign the input must carry.
    fn eval(&self, x: Elem<Self>, want: Sign) -> Result<Elem<Self>> {
        match x {
            Side::Source(f) => Ok(Side::Target(f)),
            Side::Target(f) if f.is_nonintersecting() => Ok(Side::Source(f)),
            Side::Target(f) => {
                debug_assert_eq!(f.sign(), want);
                Ok(Side::Target(tail_swap(&f)?.0))
            }
        }
    }
}

fn outside(x: &Elem<PhiLgv>, what: &str) -> Error {
    let f: &SignedPathFamily = match x {
        Side::Source(f) | Side::Target(f) => f,
    };
    Error::Sijection(format!(
        "family {f} is not in the {what} of the LGV sijection"
    ))
}

impl Sijection for PhiLgv {
    type Source = NiFamilySet;
    type Target = FamilySet;

    fn source(&self) -> &NiFamilySet {
        &self.ni
    }

    fn target(&self) -> &FamilySet {
        &self.all
    }

    fn forward_traced(&self, x: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        if !self.in_domain(&x) {
            return Err(outside(&x, "domain"));
        }
        self.eval(x, Sign::Minus)
    }

    fn backward_traced(&self, y: Elem<Self>, _: &mut Trace) -> Result<Elem<Self>> {
        if !self.in_codomain(&y) {
            return Err(outside(&y, "codomain"));
        }
        self.eval(y, Sign::Plus)
    }
}
