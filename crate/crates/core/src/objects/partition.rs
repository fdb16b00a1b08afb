use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition `λ_1 >= λ_2 >= … >= λ_ℓ >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::invalid(
                "partition",
                format!("part {} is zero; parts must be positive", i + 1),
            ));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::invalid(
                "partition",
                format!(
                    "part {} ({}) is smaller than part {} ({}); parts must be weakly decreasing",
                    i + 1,
                    parts[i],
                    i + 2,
                    parts[i + 1]
                ),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition: `μ_j = #{i : λ_i >= j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Cells `(row, column)` in row-major order, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .enumerate()
            .map(|(i, t)| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::invalid(
                        "partition",
                        format!(
                            "part {}: {:?} is not a nonnegative integer",
                            i + 1,
                            t.trim()
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Partitions of a single size in reverse lexicographic order, `(n)` first.
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        PartitionsOf {
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: lower the last part exceeding 1 and refill greedily.
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let ones = current.len() - k - 1;
            let mut succ = current[..k].to_vec();
            let top = current[k] - 1;
            let mut rest = ones + 1 + top;
            while rest > 0 {
                let part = top.min(rest);
                succ.push(part);
                rest -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition(current))
    }
}

/// Every partition with `|λ| <= max_size`: by size ascending, then reverse
/// lexicographic within a size.
pub fn enumerate_partitions(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(PartitionsOf::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).transpose(), p(&[]));
        assert_eq!(p(&[4, 2, 2, 1]).transpose(), p(&[4, 3, 1, 1]));
    }

    #[test]
    fn transpose_is_involution() {
        for lam in enumerate_partitions(8) {
            assert_eq!(lam.transpose().transpose(), lam);
            assert_eq!(lam.transpose().size(), lam.size());
        }
    }

    #[test]
    fn listing_small_sizes() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![p(&[])]);
        let all: Vec<_> = enumerate_partitions(2).collect();
        assert_eq!(all, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        let four: Vec<_> = PartitionsOf::new(4).collect();
        assert_eq!(
            four,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    /// Counts by the recurrence on the largest allowed part.
    fn partition_count(n: usize, largest: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=largest.min(n))
            .map(|k| partition_count(n - k, k))
            .sum()
    }

    #[test]
    fn counts_match_recurrence() {
        assert_eq!(enumerate_partitions(4).count(), 12);
        for n in 0..=12 {
            let listed: Vec<_> = PartitionsOf::new(n).collect();
            assert_eq!(listed.len(), partition_count(n, n), "p({n})");
            assert!(listed.iter().all(|l| l.size() == n));
            let mut dedup = listed.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), listed.len());
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!(" 3, 3 ,1".parse::<Partition>().unwrap(), p(&[3, 3, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
