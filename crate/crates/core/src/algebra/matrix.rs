use super::{binomial, UniPoly};
use crate::error::{Error, Result};
use crate::objects::Partition;

/// Largest matrix accepted by [`det_division_free`]; the column-subset table has `2^n` slots.
pub const MAX_DET_SIZE: usize = 12;

/// Square matrix over `Z[x]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::invalid(
                "matrix",
                format!("row {} has {} entries, expected {n}", i + 1, rows[i].len()),
            ));
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> UniPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.n + j]
    }

    /// Entrywise evaluation.
    pub fn map(&self, f: impl Fn(&UniPoly) -> UniPoly) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Determinant by row-wise Laplace expansion memoised over column subsets.
///
/// `minor[s]` holds the signed sum over bijections from the first `|s|` rows
/// onto the columns in `s`; no division ever happens. `O(2^n * n)` products.
pub fn det_division_free(m: &PolyMatrix) -> Result<UniPoly> {
    let n = m.size();
    if n > MAX_DET_SIZE {
        return Err(Error::MatrixTooLarge {
            size: n,
            limit: MAX_DET_SIZE,
        });
    }
    let full = (1usize << n) - 1;
    let mut minor = vec![UniPoly::zero(); 1 << n];
    minor[0] = UniPoly::one();
    // Subsets in increasing numeric order visit every s \ {j} before s.
    for s in 1..=full {
        let row = s.count_ones() as usize - 1;
        let mut acc = UniPoly::zero();
        for j in 0..n {
            if s & (1 << j) == 0 {
                continue;
            }
            let rest = s & !(1 << j);
            let entry = m.get(row, j);
            if entry.is_zero() || minor[rest].is_zero() {
                continue;
            }
            let term = entry * &minor[rest];
            // Rows placed earlier on larger columns are inversions.
            let inversions = (rest >> (j + 1)).count_ones();
            acc = if inversions % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        minor[s] = acc;
    }
    Ok(std::mem::take(&mut minor[full]))
}

/// Single-path generating matrix for plane partitions of shape `shape`
/// bounded by `max`: entry `(i, j)` is
/// `C(λ_j + m - 1, m + j - i) x + C(λ_j + m - 1, m + j - i - 1)`.
///
/// The `x` term counts paths `a_i -> b_j` whose last step is east.
pub fn lgv_matrix(shape: &Partition, max: usize) -> PolyMatrix {
    let parts = shape.parts();
    let m = max as i64;
    PolyMatrix::from_fn(parts.len(), |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let top = parts[(j - 1) as usize] as i64 + m - 1;
        let east = binomial(top, m + j - i);
        let south = binomial(top, m + j - i - 1);
        UniPoly::from_coeffs(vec![south, east])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, Sign};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn leibniz(m: &PolyMatrix) -> UniPoly {
        let n = m.size();
        let mut acc = UniPoly::zero();
        for p in Permutation::all(n) {
            let mut term = UniPoly::one();
            for i in 0..n {
                term = &term * m.get(i, p.apply(i));
            }
            acc = match p.sign() {
                Sign::Plus => &acc + &term,
                Sign::Minus => &acc - &term,
            };
        }
        acc
    }

    fn consts(rows: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| UniPoly::constant(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        let one = PolyMatrix::from_rows(vec![vec![UniPoly::from_i64s(&[1, 1])]]).unwrap();
        assert_eq!(
            det_division_free(&one).unwrap(),
            UniPoly::from_i64s(&[1, 1])
        );

        assert_eq!(
            det_division_free(&consts(&[&[6, 1], &[4, 3]])).unwrap(),
            UniPoly::constant(14)
        );

        let d = UniPoly::from_i64s(&[1, 2]);
        let diag = PolyMatrix::from_rows(vec![
            vec![d.clone(), UniPoly::zero()],
            vec![UniPoly::zero(), d],
        ])
        .unwrap();
        assert_eq!(
            det_division_free(&diag).unwrap(),
            UniPoly::from_i64s(&[1, 4, 4])
        );

        let empty = PolyMatrix::from_rows(vec![]).unwrap();
        assert_eq!(det_division_free(&empty).unwrap(), UniPoly::one());
    }

    #[test]
    fn permutation_matrix_signs() {
        let m = consts(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(det_division_free(&m).unwrap(), UniPoly::one());
        let m = consts(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_division_free(&m).unwrap(), UniPoly::constant(-1));
    }

    #[test]
    fn size_limit() {
        let m = PolyMatrix::from_fn(13, |i, j| UniPoly::constant((i == j) as i64));
        assert_eq!(
            det_division_free(&m),
            Err(Error::MatrixTooLarge {
                size: 13,
                limit: 12
            })
        );
        let m = PolyMatrix::from_fn(12, |i, j| UniPoly::constant((i == j) as i64));
        assert_eq!(det_division_free(&m).unwrap(), UniPoly::one());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(PolyMatrix::from_rows(vec![vec![UniPoly::one()], vec![]]).is_err());
    }

    #[test]
    fn lgv_matrix_entries() {
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        assert_eq!(
            *lgv_matrix(&p(&[1]), 1).get(0, 0),
            UniPoly::from_i64s(&[1, 1])
        );
        assert_eq!(
            *lgv_matrix(&p(&[2]), 1).get(0, 0),
            UniPoly::from_i64s(&[1, 2])
        );
        assert_eq!(*lgv_matrix(&p(&[1]), 0).get(0, 0), UniPoly::x());
        let at_one = lgv_matrix(&p(&[2, 1]), 2).map(|e| UniPoly::constant(e.eval_at_one()));
        assert_eq!(at_one, consts(&[&[6, 1], &[4, 3]]));
        assert_eq!(
            det_division_free(&at_one).unwrap().eval_at_one(),
            BigInt::from(14)
        );
    }

    fn matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 0..3), n * n).prop_map(move |es| {
            let mut it = es.into_iter();
            PolyMatrix::from_fn(n, |_, _| UniPoly::from_i64s(&it.next().unwrap()))
        })
    }

    proptest! {
        #[test]
        fn agrees_with_leibniz(m in (1usize..=4).prop_flat_map(matrix)) {
            prop_assert_eq!(det_division_free(&m).unwrap(), leibniz(&m));
        }
    }
}
