use std::sync::Arc;

use super::FamilySet;
use crate::error::{Error, Result};
use crate::paths::{Endpoints, Path, SignedPathFamily};
use crate::perm::Permutation;
use crate::sijection::SignPreserving;

/// A sign-preserving bijection of a family set, viewed as a sijection.
pub type FamilyMap = SignPreserving<FamilySet, FamilySet>;

/// Reverses every path word: the 180° rotation of each path about the
/// midpoint of its endpoints. Swaps [`crate::paths::eta1`] and [`crate::paths::eta2`].
pub fn psi_reverse(f: &SignedPathFamily) -> SignedPathFamily {
    SignedPathFamily::from_parts_unchecked(
        f.endpoints().clone(),
        f.sigma().clone(),
        f.paths().iter().map(Path::reversed).collect(),
    )
}

pub fn psi_sijection(endpoints: Arc<Endpoints>) -> FamilyMap {
    let set = FamilySet::new(endpoints);
    SignPreserving::new(
        set.clone(),
        set,
        |f| Ok(psi_reverse(f)),
        |f| Ok(psi_reverse(f)),
    )
}

/// Moves step `t` of every path to position `σ(t)`.
///
/// Every path must have exactly `σ.len()` steps; the east-step label vector
/// is permuted the same way.
pub fn dir_permute(f: &SignedPathFamily, sigma: &Permutation) -> Result<SignedPathFamily> {
    let n = sigma.len();
    let mut paths = Vec::with_capacity(f.len());
    for (i, p) in f.paths().iter().enumerate() {
        if p.len() != n {
            return Err(Error::Family(format!(
                "path {} has {} steps but the permutation has length {n}",
                i + 1,
                p.len()
            )));
        }
        let mut word = p.word().to_vec();
        for (t, &s) in p.word().iter().enumerate() {
            word[sigma.apply(t)] = s;
        }
        paths.push(Path::new(p.start(), word));
    }
    Ok(SignedPathFamily::from_parts_unchecked(
        f.endpoints().clone(),
        f.sigma().clone(),
        paths,
    ))
}

pub fn dir_permute_sijection(endpoints: Arc<Endpoints>, sigma: Permutation) -> FamilyMap {
    let set = FamilySet::new(endpoints);
    let inverse = sigma.inverse();
    SignPreserving::new(
        set.clone(),
        set,
        move |f| dir_permute(f, &sigma),
        move |f| dir_permute(f, &inverse),
    )
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::guard::Guard;
    use crate::objects::{enumerate_ssyt, Partition};
    use crate::paths::{enumerate_families, eta1, eta2, eta_labels, ssyt_encode, Point};
    use crate::sijection::{check_compatibility, check_sijection, Statistic};

    fn single(start: Point, word: &str) -> SignedPathFamily {
        let p = Path::parse(start, word).unwrap();
        let ends = Arc::new(Endpoints::new(vec![start], vec![p.end()]).unwrap());
        SignedPathFamily::new(ends, Permutation::identity(1), vec![p]).unwrap()
    }

    fn words(f: &SignedPathFamily) -> Vec<String> {
        f.paths().iter().map(Path::word_string).collect()
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(
            words(&psi_reverse(&single(Point::new(0, 0), "ESS"))),
            ["SSE"]
        );
        let q = crate::paths::pp_encode(
            &crate::objects::PlanePartition::new("1,1".parse().unwrap(), 1, vec![vec![1], vec![0]])
                .unwrap(),
        );
        let r = psi_reverse(&q);
        assert_eq!(words(&r), ["SE", "ES"]);
        assert!(!r.is_nonintersecting());
        assert_eq!(psi_reverse(&r), q);
    }

    #[test]
    fn reversal_crosses_statistics() {
        let guard = Guard::default();
        for (shape, max) in [("1,1", 1), ("2,1", 2), ("2,2", 2)] {
            let ends = Arc::new(Endpoints::plane_partition(&shape.parse().unwrap(), max));
            for f in enumerate_families(&ends, &guard).unwrap() {
                let r = psi_reverse(&f);
                assert_eq!((eta1(&r), eta2(&r)), (eta2(&f), eta1(&f)));
                assert_eq!(r.sign(), f.sign());
                assert_eq!(psi_reverse(&r), f);
            }
            let psi = psi_sijection(ends);
            assert!(check_sijection(&psi, &guard).unwrap().passed());
            let s = Statistic::new("eta1", eta1);
            let t = Statistic::new("eta2", eta2);
            assert!(check_compatibility(&psi, &s, &t, &guard).unwrap().passed());
        }
    }

    #[test]
    fn permutation_examples() {
        let f = single(Point::new(0, 0), "ESS");
        assert_eq!(dir_permute(&f, &Permutation::identity(3)).unwrap(), f);
        let swap12 = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        assert_eq!(words(&dir_permute(&f, &swap12).unwrap()), ["SES"]);
        assert!(dir_permute(&f, &Permutation::identity(2)).is_err());
    }

    #[test]
    fn labels_transform_covariantly() {
        let guard = Guard::default();
        let shape: Partition = "2,1".parse().unwrap();
        let ends = Arc::new(Endpoints::schur(&shape, 3));
        for sigma in Permutation::all(3) {
            for f in enumerate_families(&ends, &guard).unwrap() {
                let g = dir_permute(&f, &sigma).unwrap();
                let (v, w) = (eta_labels(&f, 3).unwrap(), eta_labels(&g, 3).unwrap());
                for t in 0..3 {
                    assert_eq!(w[sigma.apply(t)], v[t]);
                }
                assert_eq!(g.sign(), f.sign());
            }
            assert!(
                check_sijection(&dir_permute_sijection(ends.clone(), sigma), &guard)
                    .unwrap()
                    .passed()
            );
        }
        // encoded tableaux stay on the same endpoints
        for t in enumerate_ssyt(&shape, 3) {
            let f = ssyt_encode(&t);
            let g = dir_permute(&f, &Permutation::from_one_based(&[3, 1, 2]).unwrap()).unwrap();
            assert_eq!(g.endpoints(), f.endpoints());
        }
    }

    fn word_and_shuffle() -> impl Strategy<Value = (String, Vec<usize>)> {
        "[ES]{0,6}".prop_flat_map(|w| {
            let n = w.len();
            (Just(w), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn permuting_back_is_identity((word, images) in word_and_shuffle()) {
            let f = single(Point::new(0, 0), &word);
            let sigma = Permutation::from_images(images).unwrap();
            let g = dir_permute(&f, &sigma).unwrap();
            prop_assert_eq!(dir_permute(&g, &sigma.inverse()).unwrap(), f);
        }
    }
}
