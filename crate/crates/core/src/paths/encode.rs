//! Plane partitions and tableaux as non-intersecting path families.

use std::sync::Arc;

use super::{Endpoints, Path, SignedPathFamily, Step};
use crate::error::{Error, Result};
use crate::objects::{Partition, PlanePartition, Tableau};
use crate::perm::Permutation;

/// Row `i` becomes a path `a_i -> b_i` whose `k`-th east step is preceded by
/// exactly `m - P[i][k]` south steps.
pub fn pp_encode(p: &PlanePartition) -> SignedPathFamily {
    let ends = Arc::new(Endpoints::plane_partition(p.shape(), p.max()));
    let m = p.max();
    let paths = p
        .rows()
        .iter()
        .zip(ends.starts())
        .map(|(row, &start)| {
            let mut word = Vec::with_capacity(row.len() + m);
            let mut south = 0;
            for &entry in row {
                while south < m - entry {
                    word.push(Step::S);
                    south += 1;
                }
                word.push(Step::E);
            }
            word.extend(std::iter::repeat_n(Step::S, m - south));
            Path::new(start, word)
        })
        .collect();
    SignedPathFamily::from_parts_unchecked(ends.clone(), Permutation::identity(ends.len()), paths)
}

/// Inverse of [`pp_encode`].
pub fn pp_decode(f: &SignedPathFamily, shape: &Partition, max: usize) -> Result<PlanePartition> {
    let expected = Endpoints::plane_partition(shape, max);
    if **f.endpoints() != expected {
        return Err(Error::Family(format!(
            "endpoints do not match shape {shape} with max {max}"
        )));
    }
    check_identity_disjoint(f)?;
    let rows = f
        .paths()
        .iter()
        .map(|path| {
            let mut south = 0;
            let mut row = Vec::new();
            for &s in path.word() {
                match s {
                    Step::S => south += 1,
                    Step::E => row.push(max - south),
                }
            }
            row
        })
        .collect();
    PlanePartition::new(shape.clone(), max, rows)
}

/// Column `j` becomes a path `a_j -> b_j` of `n` steps whose east steps sit
/// exactly at the positions listed in the column.
pub fn ssyt_encode(t: &Tableau) -> SignedPathFamily {
    let ends = Arc::new(Endpoints::schur(t.shape(), t.vars()));
    let paths = ends
        .starts()
        .iter()
        .enumerate()
        .map(|(j, &start)| {
            let mut word = vec![Step::S; t.vars()];
            for e in t.column(j) {
                word[e - 1] = Step::E;
            }
            Path::new(start, word)
        })
        .collect();
    SignedPathFamily::from_parts_unchecked(ends.clone(), Permutation::identity(ends.len()), paths)
}

/// Inverse of [`ssyt_encode`].
pub fn ssyt_decode(f: &SignedPathFamily, shape: &Partition, vars: usize) -> Result<Tableau> {
    let expected = Endpoints::schur(shape, vars);
    if **f.endpoints() != expected {
        return Err(Error::Family(format!(
            "endpoints do not match shape {shape} with {vars} variables"
        )));
    }
    check_identity_disjoint(f)?;
    let columns: Vec<Vec<usize>> = f
        .paths()
        .iter()
        .map(|p| {
            p.word()
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Step::E)
                .map(|(t, _)| t + 1)
                .collect()
        })
        .collect();
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| columns[j][i]).collect())
        .collect();
    Tableau::new(shape.clone(), vars, rows)
}

fn check_identity_disjoint(f: &SignedPathFamily) -> Result<()> {
    if !f.sigma().is_identity() {
        return Err(Error::Family(format!(
            "connection {} is not the identity",
            f.sigma()
        )));
    }
    if !f.is_nonintersecting() {
        return Err(Error::Family("paths intersect".to_string()));
    }
    Ok(())
}
