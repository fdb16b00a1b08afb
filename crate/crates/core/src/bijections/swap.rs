use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{Path, Point, SignedPathFamily};

/// Where a tail swap cuts: the least shared point (by `x`, then `y`) and the
/// two smallest indices of paths through it, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwapCertificate {
    pub point: Point,
    pub paths: [usize; 2],
}

/// The certificate [`tail_swap`] would use, or `None` for a vertex-disjoint family.
pub fn swap_certificate(f: &SignedPathFamily) -> Option<SwapCertificate> {
    let shared = f.shared_points();
    let (&point, through) = shared.iter().min_by_key(|(p, _)| **p)?;
    Some(SwapCertificate {
        point,
        paths: [through[0] + 1, through[1] + 1],
    })
}

/// Exchanges the tails of the two certificate paths after the certificate
/// point and composes `σ` with the transposition of their indices.
///
/// The multiset of visited points is unchanged, so the certificate of the
/// image is the same and the map is an involution on intersecting families.
pub fn tail_swap(f: &SignedPathFamily) -> Result<(SignedPathFamily, SwapCertificate)> {
    let cert = swap_certificate(f)
        .ok_or_else(|| Error::Family(format!("tail swap of a non-intersecting family {f}")))?;
    let (i, j) = (cert.paths[0] - 1, cert.paths[1] - 1);
    let (pi, pj) = (&f.paths()[i], &f.paths()[j]);
    let ki = pi
        .arrival(cert.point)
        .expect("certificate point lies on path i");
    let kj = pj
        .arrival(cert.point)
        .expect("certificate point lies on path j");
    let (head_i, tail_i) = pi.split_at(ki);
    let (head_j, tail_j) = pj.split_at(kj);

    let mut paths = f.paths().to_vec();
    paths[i] = Path::new(pi.start(), [head_i, tail_j].concat());
    paths[j] = Path::new(pj.start(), [head_j, tail_i].concat());
    let mut sigma = f.sigma().clone();
    sigma.swap_positions(i, j);
    let out = SignedPathFamily::new(f.endpoints().clone(), sigma, paths)?;
    Ok((out, cert))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::guard::Guard;
    use crate::objects::Partition;
    use crate::paths::{enumerate_families, Endpoints};
    use crate::perm::Permutation;

    fn family(shape: &str, max: usize, sigma: &[usize], words: &[&str]) -> SignedPathFamily {
        let ends = Arc::new(Endpoints::plane_partition(&shape.parse().unwrap(), max));
        let paths = words
            .iter()
            .zip(ends.starts())
            .map(|(w, &a)| Path::parse(a, w).unwrap())
            .collect();
        SignedPathFamily::new(ends, Permutation::from_one_based(sigma).unwrap(), paths).unwrap()
    }

    #[test]
    fn transposed_family_swaps_to_identity() {
        let f = family("1,1", 1, &[2, 1], &["SS", "EE"]);
        let (g, cert) = tail_swap(&f).unwrap();
        assert_eq!(g, family("1,1", 1, &[1, 2], &["SE", "ES"]));
        assert_eq!(cert.point, Point::new(-1, -2));
        assert_eq!(cert.paths, [1, 2]);
        assert_eq!(
            serde_json::to_string(&cert).unwrap(),
            r#"{"point":[-1,-2],"paths":[1,2]}"#
        );
        let (back, cert2) = tail_swap(&g).unwrap();
        assert_eq!(back, f);
        assert_eq!(cert2, cert);
    }

    #[test]
    fn disjoint_family_is_rejected() {
        let f = family("1,1", 1, &[1, 2], &["ES", "SE"]);
        assert!(swap_certificate(&f).is_none());
        assert!(tail_swap(&f).is_err());
    }

    #[test]
    fn exhaustive_involution() {
        for (shape, max) in [
            ("1,1", 1),
            ("1,1", 2),
            ("2,1", 1),
            ("2,1", 2),
            ("2,2", 1),
            ("2,2", 2),
        ] {
            let shape: Partition = shape.parse().unwrap();
            let ends = Arc::new(Endpoints::plane_partition(&shape, max));
            for f in enumerate_families(&ends, &Guard::default()).unwrap() {
                if f.is_nonintersecting() {
                    continue;
                }
                let (g, cert) = tail_swap(&f).unwrap();
                assert_eq!(g.sign(), f.sign().flip());
                assert!(!g.is_nonintersecting());
                assert_eq!(g.edge_multiset(), f.edge_multiset());
                let shared = |h: &SignedPathFamily| {
                    let mut v: Vec<Point> = h.shared_points().into_keys().collect();
                    v.sort();
                    v
                };
                assert_eq!(shared(&g), shared(&f));
                assert_eq!(swap_certificate(&g), Some(cert));
                assert_eq!(tail_swap(&g).unwrap().0, f);
            }
        }
    }
}
