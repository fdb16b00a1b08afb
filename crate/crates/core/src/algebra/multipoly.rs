use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Polynomial in `x_1, …, x_n` with integer coefficients.
///
/// Terms map exponent vectors (all of length `n`) to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: Vec<u32>, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coef.into());
        p
    }

    /// `x_i` with `i` zero-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(exp, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Adds `coef * x^exp` in place; panics when `exp` has the wrong length.
    pub fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_vars(&self, rhs: &MultiPoly) -> Result<()> {
        if self.nvars != rhs.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: rhs.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(rhs)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        Ok(out)
    }

    /// Substitutes `x_i -> x_{sigma(i)}`: the coefficient of `e` moves to `e'`
    /// with `e'[sigma(i)] = e[i]`.
    pub fn permute_vars(&self, sigma: &Permutation) -> Result<MultiPoly> {
        if sigma.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: sigma.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut moved = vec![0; e.len()];
                for (i, &v) in e.iter().enumerate() {
                    moved[sigma.apply(i)] = v;
                }
                (moved, c.clone())
            })
            .collect();
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Terms ordered descending lexicographically by exponent vector.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| Reverse(*e));
        v
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct MultiPolyJson {
    vars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultiPolyJson {
            vars: self.nvars,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coef: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MultiPolyJson::deserialize(d)?;
        let mut p = MultiPoly::zero(raw.vars);
        for (i, t) in raw.terms.into_iter().enumerate() {
            if t.exp.len() != raw.vars {
                return Err(D::Error::custom(format!(
                    "terms[{i}]: exponent vector has length {}, expected {}",
                    t.exp.len(),
                    raw.vars
                )));
            }
            let c = t.coef.parse::<BigInt>().map_err(|_| {
                D::Error::custom(format!("terms[{i}]: bad coefficient {:?}", t.coef))
            })?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}
