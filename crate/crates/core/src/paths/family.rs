use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize, Serializer};

use super::{paths_between, Path, Point, Step};
use crate::algebra::binomial;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::objects::Partition;
use crate::perm::{Permutation, Sign};

/// Start points `a` and end points `b` of a path family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoints {
    a: Vec<Point>,
    b: Vec<Point>,
}

impl Endpoints {
    pub fn new(a: Vec<Point>, b: Vec<Point>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Family(format!(
                "{} start points but {} end points",
                a.len(),
                b.len()
            )));
        }
        Ok(Endpoints { a, b })
    }

    /// `a_i = (-i, -i)`, `b_j = (λ_j - j, -m - j)`.
    pub fn plane_partition(shape: &Partition, max: usize) -> Self {
        let m = max as i64;
        let (a, b) = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &part)| {
                let i = k as i64 + 1;
                (Point::new(-i, -i), Point::new(part as i64 - i, -m - i))
            })
            .unzip();
        Endpoints { a, b }
    }

    /// `a_j = (-j, -j)`, `b_j = (μ_j - j, μ_j - j - n)` with `μ = λ'`; every
    /// path has exactly `n` steps.
    pub fn schur(shape: &Partition, vars: usize) -> Self {
        let n = vars as i64;
        let (a, b) = shape
            .transpose()
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &mu)| {
                let j = k as i64 + 1;
                let mu = mu as i64;
                (Point::new(-j, -j), Point::new(mu - j, mu - j - n))
            })
            .unzip();
        Endpoints { a, b }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn starts(&self) -> &[Point] {
        &self.a
    }

    pub fn ends(&self) -> &[Point] {
        &self.b
    }

    /// Number of monotone paths `a_i -> b_j`.
    pub fn path_count(&self, i: usize, j: usize) -> u128 {
        let (from, to) = (self.a[i], self.b[j]);
        let dx = to.x - from.x;
        let dy = from.y - to.y;
        if dx < 0 || dy < 0 {
            return 0;
        }
        binomial(dx + dy, dy).try_into().unwrap_or(u128::MAX)
    }

    /// `Σ_σ Π_i #paths(a_i -> b_σ(i))`, the size of the full signed family set.
    pub fn family_count(&self) -> u128 {
        let n = self.len();
        Permutation::all(n)
            .map(|sigma| {
                (0..n).fold(1u128, |acc, i| {
                    acc.saturating_mul(self.path_count(i, sigma.apply(i)))
                })
            })
            .fold(0u128, u128::saturating_add)
    }
}

/// Family of paths with path `i` running `a_i -> b_σ(i)`; its sign is `sgn(σ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPathFamily {
    endpoints: Arc<Endpoints>,
    sigma: Permutation,
    paths: Vec<Path>,
}

impl SignedPathFamily {
    pub fn new(endpoints: Arc<Endpoints>, sigma: Permutation, paths: Vec<Path>) -> Result<Self> {
        let n = endpoints.len();
        if sigma.len() != n || paths.len() != n {
            return Err(Error::Family(format!(
                "{} endpoints, permutation of length {}, {} paths",
                n,
                sigma.len(),
                paths.len()
            )));
        }
        for (i, p) in paths.iter().enumerate() {
            let target = endpoints.b[sigma.apply(i)];
            if p.start() != endpoints.a[i] || p.end() != target {
                return Err(Error::Family(format!(
                    "path {} runs {} -> {}, expected {} -> {}",
                    i + 1,
                    p.start(),
                    p.end(),
                    endpoints.a[i],
                    target
                )));
            }
        }
        Ok(SignedPathFamily {
            endpoints,
            sigma,
            paths,
        })
    }

    pub(crate) fn from_parts_unchecked(
        endpoints: Arc<Endpoints>,
        sigma: Permutation,
        paths: Vec<Path>,
    ) -> Self {
        debug_assert!(Self::new(endpoints.clone(), sigma.clone(), paths.clone()).is_ok());
        SignedPathFamily {
            endpoints,
            sigma,
            paths,
        }
    }

    pub fn endpoints(&self) -> &Arc<Endpoints> {
        &self.endpoints
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn sign(&self) -> Sign {
        self.sigma.sign()
    }

    /// Vertex-disjointness.
    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths
            .iter()
            .all(|p| p.points().all(|q| seen.insert(q)))
    }

    /// Points lying on two or more paths, with the indices of those paths (ascending).
    pub fn shared_points(&self) -> HashMap<Point, Vec<usize>> {
        let mut visits: HashMap<Point, Vec<usize>> = HashMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for q in p.points() {
                visits.entry(q).or_default().push(i);
            }
        }
        visits.retain(|_, v| v.len() > 1);
        visits
    }

    /// All edges used, with multiplicity, sorted.
    pub fn edge_multiset(&self) -> Vec<(Point, Step)> {
        self.paths.iter().flat_map(Path::edges).sorted().collect()
    }

    /// All visited points, with multiplicity, sorted.
    pub fn point_multiset(&self) -> Vec<Point> {
        self.paths.iter().flat_map(Path::points).sorted().collect()
    }

    /// Same endpoints and connection, new paths (one per index).
    pub fn map_paths(&self, f: impl Fn(&Path) -> Path) -> Result<Self> {
        Self::new(
            self.endpoints.clone(),
            self.sigma.clone(),
            self.paths.iter().map(f).collect(),
        )
    }

    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            sigma: self.sigma.clone(),
            paths: self.paths.clone(),
        }
    }
}

impl fmt::Display for SignedPathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ={} [{}]",
            self.sigma,
            self.paths.iter().map(Path::word_string).join(", ")
        )
    }
}

/// Wire form of a family: `{"sigma": [1-indexed targets], "paths": [...]}`.
///
/// Endpoints are not part of the wire form; [`FamilyJson::into_family`]
/// checks the paths against a known configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub sigma: Permutation,
    pub paths: Vec<Path>,
}

impl FamilyJson {
    pub fn into_family(self, endpoints: Arc<Endpoints>) -> Result<SignedPathFamily> {
        SignedPathFamily::new(endpoints, self.sigma, self.paths)
    }
}

impl Serialize for SignedPathFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            sigma: &'a Permutation,
            paths: &'a [Path],
        }
        View {
            sigma: &self.sigma,
            paths: &self.paths,
        }
        .serialize(s)
    }
}

/// Every `(σ, paths)` on the configuration: permutations in lexicographic
/// order, then paths in east-first order per index.
pub fn enumerate_families(
    endpoints: &Arc<Endpoints>,
    guard: &Guard,
) -> Result<impl Iterator<Item = SignedPathFamily>> {
    guard.check("path families", endpoints.family_count())?;
    let n = endpoints.len();
    let endpoints = endpoints.clone();
    Ok(Permutation::all(n).flat_map(move |sigma| {
        let choices: Vec<Vec<Path>> = (0..n)
            .map(|i| paths_between(endpoints.a[i], endpoints.b[sigma.apply(i)]))
            .collect();
        let endpoints = endpoints.clone();
        let combos: Box<dyn Iterator<Item = Vec<Path>>> = if n == 0 {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(choices.into_iter().multi_cartesian_product())
        };
        combos.map(move |paths| {
            SignedPathFamily::from_parts_unchecked(endpoints.clone(), sigma.clone(), paths)
        })
    }))
}
