use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// Filling of the diagram of `shape` with integers in `[0, max]`, weakly
/// decreasing along rows and down columns.
///
/// Zero is a genuine entry: every cell of the shape is present.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PlanePartitionJson")]
pub struct PlanePartition {
    shape: Partition,
    max: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct PlanePartitionJson {
    shape: Partition,
    max: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<PlanePartitionJson> for PlanePartition {
    type Error = Error;
    fn try_from(raw: PlanePartitionJson) -> Result<Self> {
        PlanePartition::new(raw.shape, raw.max, raw.rows)
    }
}

impl PlanePartition {
    pub fn new(shape: Partition, max: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        validate(&shape, max, &rows)?;
        Ok(PlanePartition { shape, max, rows })
    }

    /// Every cell equal to `value`.
    pub fn constant(shape: &Partition, max: usize, value: usize) -> Result<Self> {
        let rows = shape.parts().iter().map(|&len| vec![value; len]).collect();
        Self::new(shape.clone(), max, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of rows whose smallest (last) entry is `0`.
    pub fn zero_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.last() == Some(&0)).count()
    }

    /// Number of rows whose largest (first) entry is the bound.
    pub fn max_rows(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.first() == Some(&self.max))
            .count()
    }
}

/// Checks shape, range, and monotonicity; messages name the first offending cell (1-based).
pub fn validate(shape: &Partition, max: usize, rows: &[Vec<usize>]) -> Result<()> {
    let bad = |msg: String| Err(Error::invalid("plane partition", msg));
    if rows.len() != shape.len() {
        return bad(format!(
            "has {} rows, shape {} requires {}",
            rows.len(),
            shape,
            shape.len()
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.part(i) {
            return bad(format!(
                "row {} has {} entries, shape requires {}",
                i + 1,
                row.len(),
                shape.part(i)
            ));
        }
        for (j, &e) in row.iter().enumerate() {
            let at = format!("row {}, column {}", i + 1, j + 1);
            if e > max {
                return bad(format!("{at}: entry {e} exceeds max {max}"));
            }
            if j > 0 && e > row[j - 1] {
                return bad(format!(
                    "{at}: entry {e} is larger than its left neighbour {}",
                    row[j - 1]
                ));
            }
            if i > 0 && e > rows[i - 1][j] {
                return bad(format!(
                    "{at}: entry {e} is larger than the entry above it {}",
                    rows[i - 1][j]
                ));
            }
        }
    }
    Ok(())
}

/// `PP(λ; m)` in lexicographically decreasing order of row-major entries,
/// starting from the all-`m` filling and ending at the all-zero filling.
#[derive(Debug, Clone)]
pub struct PlanePartitions {
    shape: Partition,
    max: usize,
    cells: Vec<(usize, usize)>,
    current: Option<Vec<Vec<usize>>>,
}

impl PlanePartitions {
    pub fn new(shape: &Partition, max: usize) -> Self {
        let mut it = PlanePartitions {
            shape: shape.clone(),
            max,
            cells: shape.cells().collect(),
            current: None,
        };
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        it.fill_from(&mut rows, 0);
        it.current = Some(rows);
        it
    }

    /// Largest admissible value of a cell given everything before it in row-major order.
    fn cap(&self, rows: &[Vec<usize>], i: usize, j: usize) -> usize {
        let mut cap = self.max;
        if j > 0 {
            cap = cap.min(rows[i][j - 1]);
        }
        if i > 0 {
            cap = cap.min(rows[i - 1][j]);
        }
        cap
    }

    fn fill_from(&self, rows: &mut [Vec<usize>], start: usize) {
        for &(i, j) in &self.cells[start..] {
            rows[i][j] = self.cap(rows, i, j);
        }
    }
}

impl Iterator for PlanePartitions {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        let rows = self.current.take()?;
        // Decrement the last positive cell; later cells only have upper
        // bounds from earlier ones, so refilling them at their caps is valid.
        if let Some(pos) = self.cells.iter().rposition(|&(i, j)| rows[i][j] > 0) {
            let mut succ = rows.clone();
            let (i, j) = self.cells[pos];
            succ[i][j] -= 1;
            self.fill_from(&mut succ, pos + 1);
            self.current = Some(succ);
        }
        Some(PlanePartition {
            shape: self.shape.clone(),
            max: self.max,
            rows,
        })
    }
}

pub fn enumerate_pp(shape: &Partition, max: usize) -> PlanePartitions {
    PlanePartitions::new(shape, max)
}

pub fn stat_zero_rows(p: &PlanePartition) -> usize {
    p.zero_rows()
}

pub fn stat_max_rows(p: &PlanePartition) -> usize {
    p.max_rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pp(shape: &[usize], max: usize, rows: Vec<Vec<usize>>) -> PlanePartition {
        PlanePartition::new(p(shape), max, rows).unwrap()
    }

    /// Every `[0, m]` filling of the shape, filtered by the validator.
    fn brute_count(shape: &Partition, m: usize) -> usize {
        let cells: Vec<_> = shape.cells().collect();
        let total = (m + 1).pow(cells.len() as u32);
        (0..total)
            .filter(|&code| {
                let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
                let mut c = code;
                for &(i, j) in &cells {
                    rows[i][j] = c % (m + 1);
                    c /= m + 1;
                }
                validate(shape, m, &rows).is_ok()
            })
            .count()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_pp(&p(&[1]), 1).count(), 2);
        assert_eq!(enumerate_pp(&p(&[2, 2]), 2).count(), 20);
        assert_eq!(enumerate_pp(&p(&[2, 1]), 2).count(), 14);
        assert_eq!(enumerate_pp(&p(&[]), 3).count(), 1);
        assert_eq!(enumerate_pp(&p(&[3, 2]), 0).count(), 1);
    }

    /// MacMahon: plane partitions in an a x b x c box number
    /// prod_{i,j,k} (i + j + k - 1) / (i + j + k - 2).
    fn macmahon(a: usize, b: usize, c: usize) -> u128 {
        let (mut num, mut den) = (1u128, 1u128);
        for i in 1..=a {
            for j in 1..=b {
                for k in 1..=c {
                    num *= (i + j + k - 1) as u128;
                    den *= (i + j + k - 2) as u128;
                }
            }
        }
        num / den
    }

    #[test]
    fn rectangles_match_box_formula() {
        assert_eq!(macmahon(2, 2, 2), 20);
        for (a, b, c) in [(2, 2, 2), (2, 3, 1), (3, 2, 2), (1, 4, 3), (3, 3, 2)] {
            let shape = Partition::new(vec![b; a]).unwrap();
            assert_eq!(enumerate_pp(&shape, c).count() as u128, macmahon(a, b, c));
        }
    }

    #[test]
    fn enumeration_is_valid_complete_and_ordered() {
        for lam in enumerate_partitions(5) {
            for m in 0..=2 {
                let all: Vec<_> = enumerate_pp(&lam, m).collect();
                assert_eq!(all.len(), brute_count(&lam, m), "{lam} m={m}");
                for w in all.windows(2) {
                    assert!(w[0].rows() > w[1].rows(), "strictly decreasing order");
                }
                for q in &all {
                    validate(q.shape(), q.max(), q.rows()).unwrap();
                }
                assert_eq!(
                    all.first(),
                    Some(&PlanePartition::constant(&lam, m, m).unwrap())
                );
                assert_eq!(
                    all.last(),
                    Some(&PlanePartition::constant(&lam, m, 0).unwrap())
                );
            }
        }
    }

    #[test]
    fn statistics() {
        let q = pp(&[1], 0, vec![vec![0]]);
        assert_eq!(q.zero_rows(), 1);
        let q = pp(&[1, 1], 1, vec![vec![1], vec![0]]);
        assert_eq!(q.zero_rows(), 1);
        let q = pp(&[1], 1, vec![vec![1]]);
        assert_eq!(q.max_rows(), 1);
        let q = pp(&[2], 1, vec![vec![0, 0]]);
        assert_eq!(q.max_rows(), 0);
        let q = pp(&[3, 2, 1], 2, vec![vec![2, 1, 0], vec![1, 1], vec![0]]);
        assert_eq!(stat_zero_rows(&q), 2);
        assert_eq!(stat_max_rows(&q), 1);
    }

    #[test]
    fn degenerate_bound() {
        for lam in enumerate_partitions(6) {
            let only: Vec<_> = enumerate_pp(&lam, 0).collect();
            assert_eq!(only.len(), 1);
            assert_eq!(only[0].zero_rows(), lam.len());
            assert_eq!(only[0].max_rows(), lam.len());
        }
    }

    #[test]
    fn validation_messages_are_positional() {
        let err = PlanePartition::new(p(&[2, 1]), 2, vec![vec![2, 3], vec![0]]).unwrap_err();
        assert!(err.to_string().contains("row 1, column 2"), "{err}");
        let err = PlanePartition::new(p(&[2, 1]), 2, vec![vec![1, 1], vec![2]]).unwrap_err();
        assert!(err.to_string().contains("row 2, column 1"), "{err}");
        let err = PlanePartition::new(p(&[2, 1]), 2, vec![vec![1, 2], vec![0]]).unwrap_err();
        assert!(err.to_string().contains("left neighbour"), "{err}");
        let err = PlanePartition::new(p(&[2, 1]), 2, vec![vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("rows"), "{err}");
        let err = PlanePartition::new(p(&[2, 1]), 2, vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("row 2 has 2 entries"), "{err}");
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let q = pp(&[2, 1], 2, vec![vec![2, 1], vec![0]]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"max":2,"rows":[[2,1],[0]]}"#);
        assert_eq!(serde_json::from_str::<PlanePartition>(&s).unwrap(), q);
        let bad = r#"{"shape":[2,1],"max":1,"rows":[[2,1],[0]]}"#;
        let err = serde_json::from_str::<PlanePartition>(bad).unwrap_err();
        assert!(err.to_string().contains("row 1, column 1"), "{err}");
    }
}
