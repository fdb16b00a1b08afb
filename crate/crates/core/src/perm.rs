//! Permutations of `{0, …, n-1}` stored as image vectors.
//!
//! Serialized 1-indexed, as the command line and JSON formats expect.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `perm[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::invalid(
                    "permutation",
                    format!(
                        "position {}: value {} is out of range or repeated",
                        pos + 1,
                        v + 1
                    ),
                ));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds from 1-indexed images, e.g. `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if let Some(pos) = images.iter().position(|&v| v == 0) {
            return Err(Error::invalid(
                "permutation",
                format!("position {}: values are 1-indexed", pos + 1),
            ));
        }
        Self::from_images(images.iter().map(|v| v - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self.then(other)` maps `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation(self.0.iter().map(|&v| other.0[v]).collect())
    }

    pub fn swap_positions(&mut self, i: usize, j: usize) {
        self.0.swap(i, j);
    }

    /// Parity from the cycle decomposition.
    pub fn sign(&self) -> Sign {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut even = true;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.0[cur];
                len += 1;
            }
            if len % 2 == 0 {
                even = !even;
            }
        }
        if even {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// All permutations of `n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_one_based().iter().join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_of_small_permutations() {
        assert_eq!(Permutation::identity(4).sign(), Sign::Plus);
        assert_eq!(
            Permutation::from_images(vec![1, 0]).unwrap().sign(),
            Sign::Minus
        );
        assert_eq!(
            Permutation::from_images(vec![1, 2, 0]).unwrap().sign(),
            Sign::Plus
        );
        let odd = Permutation::all(4)
            .filter(|p| p.sign() == Sign::Minus)
            .count();
        assert_eq!(odd, 12);
    }

    #[test]
    fn inverse_and_composition() {
        for p in Permutation::all(4) {
            assert!(p.then(&p.inverse()).is_identity());
            assert!(p.inverse().then(&p).is_identity());
        }
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_one_based(&[1, 3]).is_err());
    }
}
