use std::collections::HashSet;
use std::sync::Arc;

use crate::error::Result;
use crate::guard::Guard;
use crate::paths::{enumerate_families, paths_between, Endpoints, Path, Point, SignedPathFamily};
use crate::perm::{Permutation, Sign};
use crate::sijection::SignedSet;

/// Every path family on a configuration, signed by `sgn(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySet {
    endpoints: Arc<Endpoints>,
}

impl FamilySet {
    pub fn new(endpoints: Arc<Endpoints>) -> Self {
        FamilySet { endpoints }
    }

    pub fn endpoints(&self) -> &Arc<Endpoints> {
        &self.endpoints
    }
}

impl SignedSet for FamilySet {
    type Item = SignedPathFamily;

    fn sign(&self, f: &SignedPathFamily) -> Sign {
        f.sign()
    }

    fn contains(&self, f: &SignedPathFamily) -> bool {
        same_endpoints(f, &self.endpoints)
    }

    fn size_bound(&self) -> u128 {
        self.endpoints.family_count()
    }

    fn elements(&self, guard: &Guard) -> Result<Vec<SignedPathFamily>> {
        Ok(enumerate_families(&self.endpoints, guard)?.collect())
    }
}

/// The vertex-disjoint families on a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiFamilySet {
    endpoints: Arc<Endpoints>,
}

impl NiFamilySet {
    pub fn new(endpoints: Arc<Endpoints>) -> Self {
        NiFamilySet { endpoints }
    }

    pub fn endpoints(&self) -> &Arc<Endpoints> {
        &self.endpoints
    }
}

impl SignedSet for NiFamilySet {
    type Item = SignedPathFamily;

    fn sign(&self, f: &SignedPathFamily) -> Sign {
        f.sign()
    }

    fn contains(&self, f: &SignedPathFamily) -> bool {
        same_endpoints(f, &self.endpoints) && f.is_nonintersecting()
    }

    fn size_bound(&self) -> u128 {
        self.endpoints.family_count()
    }

    /// Depth-first search over `(σ(i), path_i)` pruned at the first shared
    /// vertex, so intersecting families are never materialised.
    fn elements(&self, guard: &Guard) -> Result<Vec<SignedPathFamily>> {
        let mut search = NiSearch {
            endpoints: &self.endpoints,
            guard,
            nodes: 0,
            used: vec![false; self.endpoints.len()],
            images: Vec::new(),
            paths: Vec::new(),
            occupied: HashSet::new(),
            out: Vec::new(),
        };
        search.run()?;
        Ok(search.out)
    }
}

fn same_endpoints(f: &SignedPathFamily, endpoints: &Arc<Endpoints>) -> bool {
    Arc::ptr_eq(f.endpoints(), endpoints) || **f.endpoints() == **endpoints
}

struct NiSearch<'a> {
    endpoints: &'a Arc<Endpoints>,
    guard: &'a Guard,
    nodes: u128,
    used: Vec<bool>,
    images: Vec<usize>,
    paths: Vec<Path>,
    occupied: HashSet<Point>,
    out: Vec<SignedPathFamily>,
}

impl NiSearch<'_> {
    fn run(&mut self) -> Result<()> {
        let i = self.paths.len();
        let n = self.endpoints.len();
        if i == n {
            let sigma = Permutation::from_images(self.images.clone())?;
            self.out.push(SignedPathFamily::from_parts_unchecked(
                self.endpoints.clone(),
                sigma,
                self.paths.clone(),
            ));
            return Ok(());
        }
        let start = self.endpoints.starts()[i];
        for j in 0..n {
            if self.used[j] {
                continue;
            }
            for p in paths_between(start, self.endpoints.ends()[j]) {
                self.nodes += 1;
                self.guard
                    .check("non-intersecting search nodes", self.nodes)?;
                if p.points().any(|q| self.occupied.contains(&q)) {
                    continue;
                }
                self.occupied.extend(p.points());
                self.used[j] = true;
                self.images.push(j);
                self.paths.push(p);
                self.run()?;
                let p = self.paths.pop().expect("pushed above");
                self.images.pop();
                self.used[j] = false;
                for q in p.points() {
                    self.occupied.remove(&q);
                }
            }
        }
        Ok(())
    }
}
