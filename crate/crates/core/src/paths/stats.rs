use super::{SignedPathFamily, Step};
use crate::error::{Error, Result};

/// Paths whose final step is east.
///
/// On an encoded plane partition this is the number of rows containing `0`.
/// The edges counted are the east steps into the `b_j`. Counting the south
/// steps into the `b_j` instead gives `ℓ(λ) - eta1`, the number of rows without
/// a `0`, which does not match the `x` column of [`crate::algebra::lgv_matrix`].
pub fn eta1(f: &SignedPathFamily) -> usize {
    f.paths()
        .iter()
        .filter(|p| p.last_step() == Some(Step::E))
        .count()
}

/// Paths whose first step is east (edges `a_i -> a_i + (1, 0)`).
///
/// On an encoded plane partition this is the number of rows containing `m`.
pub fn eta2(f: &SignedPathFamily) -> usize {
    f.paths()
        .iter()
        .filter(|p| p.first_step() == Some(Step::E))
        .count()
}

/// `v[t - 1]` counts east steps leaving a point with `x - y = t - 1`, over all paths.
///
/// Every path must have exactly `n` steps, as on the tableau configuration.
pub fn eta_labels(f: &SignedPathFamily, n: usize) -> Result<Vec<u32>> {
    let mut v = vec![0u32; n];
    for (i, p) in f.paths().iter().enumerate() {
        if p.len() != n {
            return Err(Error::Family(format!(
                "path {} has {} steps, expected {n}",
                i + 1,
                p.len()
            )));
        }
        for (from, s) in p.edges() {
            if s == Step::E {
                let t = from.label();
                if t < 1 || t > n as i64 {
                    return Err(Error::Family(format!(
                        "path {}: east step at {from} has label {t} outside [1, {n}]",
                        i + 1
                    )));
                }
                v[(t - 1) as usize] += 1;
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guard::Guard;
    use crate::objects::{
        enumerate_partitions, enumerate_pp, enumerate_ssyt, Partition, PlanePartition, Tableau,
    };
    use crate::paths::{enumerate_families, pp_encode, ssyt_encode, Endpoints, Path, Point};
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn edge_statistic_examples() {
        let q = PlanePartition::new(p(&[1, 1]), 1, vec![vec![1], vec![0]]).unwrap();
        let f = pp_encode(&q);
        assert_eq!(eta1(&f), 1);
        assert_eq!(eta2(&f), 1);
        let lam = p(&[3, 1, 1]);
        let zeros = pp_encode(&PlanePartition::constant(&lam, 2, 0).unwrap());
        assert_eq!((eta1(&zeros), eta2(&zeros)), (3, 0));
        let tops = pp_encode(&PlanePartition::constant(&lam, 2, 2).unwrap());
        assert_eq!((eta1(&tops), eta2(&tops)), (0, 3));
        let flat = pp_encode(&PlanePartition::constant(&lam, 0, 0).unwrap());
        assert_eq!((eta1(&flat), eta2(&flat)), (3, 3));
    }

    #[test]
    fn edge_statistics_match_row_statistics() {
        for lam in enumerate_partitions(6) {
            for m in 0..=3 {
                for q in enumerate_pp(&lam, m) {
                    let f = pp_encode(&q);
                    assert_eq!(eta1(&f), q.zero_rows());
                    assert_eq!(eta2(&f), q.max_rows());
                }
            }
        }
    }

    #[test]
    fn label_examples() {
        let t = Tableau::new(p(&[2, 1]), 3, vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(eta_labels(&ssyt_encode(&t), 3).unwrap(), vec![2, 1, 0]);

        let ends = Arc::new(Endpoints::schur(&p(&[1, 1]), 4));
        let f = SignedPathFamily::new(
            ends,
            Permutation::identity(1),
            vec![Path::parse(Point::new(-1, -1), "EESS").unwrap()],
        )
        .unwrap();
        assert_eq!(eta_labels(&f, 4).unwrap(), vec![1, 1, 0, 0]);

        let empty = ssyt_encode(&Tableau::new(p(&[]), 3, vec![]).unwrap());
        assert_eq!(eta_labels(&empty, 3).unwrap(), vec![0, 0, 0]);
        assert!(eta_labels(&f, 3).is_err());
    }

    #[test]
    fn labels_are_tableau_weights() {
        for lam in enumerate_partitions(5) {
            for n in 1..=4 {
                for t in enumerate_ssyt(&lam, n) {
                    assert_eq!(eta_labels(&ssyt_encode(&t), n).unwrap(), t.weight());
                }
            }
        }
    }

    #[test]
    fn every_schur_family_path_has_n_steps() {
        let g = Guard::default();
        let ends = Arc::new(Endpoints::schur(&p(&[2, 2, 1]), 3));
        for f in enumerate_families(&ends, &g).unwrap() {
            let w = eta_labels(&f, 3).unwrap();
            assert_eq!(w.iter().sum::<u32>(), 5);
        }
    }
}
