use std::sync::Arc;

use super::{dir_permute_sijection, phi_lgv, psi_sijection, FamilyMap, PhiLgv};
use crate::error::{Error, Result};
use crate::objects::{Partition, PlanePartition, Tableau};
use crate::paths::{pp_decode, pp_encode, ssyt_decode, ssyt_encode, Endpoints, SignedPathFamily};
use crate::perm::Permutation;
use crate::sijection::{compose, Compose, Inverse, OrbitTrace, Side, Sijection};

/// `Φ⁻¹ ∘ M ∘ Φ : NI => NI` for a sign-preserving family map `M`.
pub type Conjugated = Compose<Compose<PhiLgv, FamilyMap>, Inverse<PhiLgv>>;

pub fn conjugate(map: FamilyMap) -> Result<Conjugated> {
    let phi = phi_lgv(map.source().endpoints().clone());
    compose(compose(phi.clone(), map)?, Inverse::new(phi))
}

fn run(
    sij: &Conjugated,
    f: SignedPathFamily,
    traced: bool,
) -> Result<(SignedPathFamily, Option<OrbitTrace>)> {
    let (out, trace) = if traced {
        let (out, trace) = sij.forward_with_trace(Side::Source(f))?;
        (out, Some(trace))
    } else {
        (sij.forward(Side::Source(f))?, None)
    };
    match out {
        Side::Target(g) => Ok((g, trace)),
        Side::Source(g) => Err(Error::Sijection(format!(
            "composite sent a positive family to the negative source: {g}"
        ))),
    }
}

/// The bijection `PP(λ; m) -> PP(λ; m)` carrying rows containing `0` to rows
/// containing `m`: path reversal conjugated by the LGV sijection.
#[derive(Debug)]
pub struct Theorem1Map {
    shape: Partition,
    max: usize,
    sij: Conjugated,
}

impl Theorem1Map {
    pub fn new(shape: Partition, max: usize) -> Result<Self> {
        let ends = Arc::new(Endpoints::plane_partition(&shape, max));
        let sij = conjugate(psi_sijection(ends))?;
        Ok(Theorem1Map { shape, max, sij })
    }

    pub fn sijection(&self) -> &Conjugated {
        &self.sij
    }

    fn check_input(&self, p: &PlanePartition) -> Result<()> {
        if *p.shape() != self.shape || p.max() != self.max {
            return Err(Error::Invalid {
                what: "plane partition",
                message: format!(
                    "shape {} with max {} does not match the map's shape {} with max {}",
                    p.shape(),
                    p.max(),
                    self.shape,
                    self.max
                ),
            });
        }
        Ok(())
    }

    pub fn apply(&self, p: &PlanePartition) -> Result<PlanePartition> {
        self.check_input(p)?;
        let (g, _) = run(&self.sij, pp_encode(p), false)?;
        pp_decode(&g, &self.shape, self.max)
    }

    pub fn apply_traced(&self, p: &PlanePartition) -> Result<(PlanePartition, OrbitTrace)> {
        self.check_input(p)?;
        let (g, trace) = run(&self.sij, pp_encode(p), true)?;
        Ok((
            pp_decode(&g, &self.shape, self.max)?,
            trace.expect("traced run"),
        ))
    }
}

/// One-shot [`Theorem1Map::apply_traced`].
pub fn theorem1_map(p: &PlanePartition) -> Result<(PlanePartition, OrbitTrace)> {
    Theorem1Map::new(p.shape().clone(), p.max())?.apply_traced(p)
}

/// The bijection `SSYT(λ, n) -> SSYT(λ, n)` permuting weights by `σ`:
/// direction permutation conjugated by the LGV sijection.
#[derive(Debug)]
pub struct SchurSymmetryMap {
    shape: Partition,
    vars: usize,
    sij: Conjugated,
}

impl SchurSymmetryMap {
    pub fn new(shape: Partition, vars: usize, sigma: Permutation) -> Result<Self> {
        if sigma.len() != vars {
            return Err(Error::Invalid {
                what: "permutation",
                message: format!("length {} but there are {vars} variables", sigma.len()),
            });
        }
        let ends = Arc::new(Endpoints::schur(&shape, vars));
        let sij = conjugate(dir_permute_sijection(ends, sigma))?;
        Ok(SchurSymmetryMap { shape, vars, sij })
    }

    pub fn sijection(&self) -> &Conjugated {
        &self.sij
    }

    fn check_input(&self, t: &Tableau) -> Result<()> {
        if *t.shape() != self.shape || t.vars() != self.vars {
            return Err(Error::Invalid {
                what: "tableau",
                message: format!(
                    "shape {} in {} variables does not match the map's shape {} in {} variables",
                    t.shape(),
                    t.vars(),
                    self.shape,
                    self.vars
                ),
            });
        }
        Ok(())
    }

    pub fn apply(&self, t: &Tableau) -> Result<Tableau> {
        self.check_input(t)?;
        let (g, _) = run(&self.sij, ssyt_encode(t), false)?;
        ssyt_decode(&g, &self.shape, self.vars)
    }

    pub fn apply_traced(&self, t: &Tableau) -> Result<(Tableau, OrbitTrace)> {
        self.check_input(t)?;
        let (g, trace) = run(&self.sij, ssyt_encode(t), true)?;
        Ok((
            ssyt_decode(&g, &self.shape, self.vars)?,
            trace.expect("traced run"),
        ))
    }
}

/// One-shot [`SchurSymmetryMap::apply_traced`].
pub fn schur_symmetry_map(t: &Tableau, sigma: &Permutation) -> Result<(Tableau, OrbitTrace)> {
    SchurSymmetryMap::new(t.shape().clone(), t.vars(), sigma.clone())?.apply_traced(t)
}
