use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// Semistandard Young tableau with entries in `[1, vars]`: rows weakly
/// increase, columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson")]
pub struct Tableau {
    shape: Partition,
    vars: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct TableauJson {
    shape: Partition,
    vars: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;
    fn try_from(raw: TableauJson) -> Result<Self> {
        Tableau::new(raw.shape, raw.vars, raw.rows)
    }
}

impl Tableau {
    pub fn new(shape: Partition, vars: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        validate(&shape, vars, &rows)?;
        Ok(Tableau { shape, vars, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries of column `j` (zero-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    /// `weight[t - 1]` is the number of entries equal to `t`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0; self.vars];
        for &e in self.rows.iter().flatten() {
            w[e - 1] += 1;
        }
        w
    }
}

pub fn validate(shape: &Partition, vars: usize, rows: &[Vec<usize>]) -> Result<()> {
    let bad = |msg: String| Err(Error::invalid("tableau", msg));
    if vars == 0 {
        return bad("needs at least one variable".to_string());
    }
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
            if e == 0 || e > vars {
                return bad(format!("{at}: entry {e} is outside [1, {vars}]"));
            }
            if j > 0 && e < row[j - 1] {
                return bad(format!(
                    "{at}: entry {e} is smaller than its left neighbour {}",
                    row[j - 1]
                ));
            }
            if i > 0 && e <= rows[i - 1][j] {
                return bad(format!(
                    "{at}: entry {e} does not exceed the entry above it {}",
                    rows[i - 1][j]
                ));
            }
        }
    }
    Ok(())
}

/// `SSYT(λ, n)` in lexicographically increasing order of row-major entries.
#[derive(Debug, Clone)]
pub struct Tableaux {
    shape: Partition,
    vars: usize,
    cells: Vec<(usize, usize)>,
    /// Column heights, for the per-cell ceiling `vars - (height - 1 - row)`.
    heights: Vec<usize>,
    current: Option<Vec<Vec<usize>>>,
}

impl Tableaux {
    pub fn new(shape: &Partition, vars: usize) -> Self {
        let mut it = Tableaux {
            shape: shape.clone(),
            vars,
            cells: shape.cells().collect(),
            heights: shape.transpose().parts().to_vec(),
            current: None,
        };
        if vars >= shape.len() {
            let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
            it.fill_from(&mut rows, 0);
            it.current = Some(rows);
        }
        it
    }

    fn floor(rows: &[Vec<usize>], i: usize, j: usize) -> usize {
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        lo
    }

    fn ceiling(&self, i: usize, j: usize) -> usize {
        self.vars + 1 + i - self.heights[j]
    }

    fn fill_from(&self, rows: &mut [Vec<usize>], start: usize) {
        for &(i, j) in &self.cells[start..] {
            rows[i][j] = Self::floor(rows, i, j);
        }
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let rows = self.current.take()?;
        // Ceilings weakly increase along rows and by one down columns, so
        // refilling later cells at their floors always stays under them.
        if let Some(pos) = self
            .cells
            .iter()
            .rposition(|&(i, j)| rows[i][j] < self.ceiling(i, j))
        {
            let mut succ = rows.clone();
            let (i, j) = self.cells[pos];
            succ[i][j] += 1;
            self.fill_from(&mut succ, pos + 1);
            self.current = Some(succ);
        }
        Some(Tableau {
            shape: self.shape.clone(),
            vars: self.vars,
            rows,
        })
    }
}

pub fn enumerate_ssyt(shape: &Partition, vars: usize) -> Tableaux {
    Tableaux::new(shape, vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Every `[1, n]` filling, filtered by the validator.
    fn brute(shape: &Partition, n: usize) -> Vec<Vec<Vec<usize>>> {
        let cells: Vec<_> = shape.cells().collect();
        let total = n.pow(cells.len() as u32);
        (0..total)
            .filter_map(|code| {
                let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
                let mut c = code;
                for &(i, j) in &cells {
                    rows[i][j] = c % n + 1;
                    c /= n;
                }
                validate(shape, n, &rows).is_ok().then_some(rows)
            })
            .collect()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 2).count(), 2);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).count(), 8);
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), 2).count(), 0);
        assert_eq!(enumerate_ssyt(&p(&[]), 2).count(), 1);
    }

    #[test]
    fn matches_brute_force() {
        for lam in enumerate_partitions(5) {
            for n in 1..=3 {
                let mut listed: Vec<_> = enumerate_ssyt(&lam, n).map(|t| t.rows).collect();
                for w in listed.windows(2) {
                    assert!(w[0] < w[1]);
                }
                let mut expect = brute(&lam, n);
                listed.sort();
                expect.sort();
                assert_eq!(listed, expect, "{lam} n={n}");
            }
        }
    }

    #[test]
    fn weight_and_columns() {
        let t = Tableau::new(p(&[2, 1]), 3, vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.weight(), vec![2, 1, 0]);
        assert_eq!(t.column(0), vec![1, 2]);
        assert_eq!(t.column(1), vec![1]);
    }

    #[test]
    fn validation() {
        let err = Tableau::new(p(&[2, 1]), 3, vec![vec![1, 1], vec![1]]).unwrap_err();
        assert!(err.to_string().contains("row 2, column 1"), "{err}");
        let err = Tableau::new(p(&[2]), 3, vec![vec![2, 1]]).unwrap_err();
        assert!(err.to_string().contains("row 1, column 2"), "{err}");
        let err = Tableau::new(p(&[1]), 2, vec![vec![3]]).unwrap_err();
        assert!(err.to_string().contains("outside"), "{err}");
        let s = r#"{"shape":[2,1],"vars":3,"rows":[[1,1],[2]]}"#;
        let t: Tableau = serde_json::from_str(s).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), s);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[1],"vars":1,"rows":[[2]]}"#).is_err());
    }
}
