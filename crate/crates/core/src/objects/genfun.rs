use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{enumerate_pp, enumerate_ssyt, Partition, PlanePartition};
use crate::algebra::{
    binomial, det_division_free, lgv_matrix, MultiPoly, PolyMatrix, UniPoly, MAX_DET_SIZE,
};
use crate::error::{Error, Result};
use crate::guard::Guard;

/// The two row statistics being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowStatistic {
    /// Rows containing `0`.
    Zeros,
    /// Rows containing the bound `m`.
    Maxes,
}

impl RowStatistic {
    pub fn eval(self, p: &PlanePartition) -> usize {
        match self {
            RowStatistic::Zeros => p.zero_rows(),
            RowStatistic::Maxes => p.max_rows(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RowStatistic::Zeros => "zeros",
            RowStatistic::Maxes => "maxes",
        }
    }
}

impl FromStr for RowStatistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeros" => Ok(RowStatistic::Zeros),
            "maxes" => Ok(RowStatistic::Maxes),
            _ => Err(Error::invalid(
                "statistic",
                format!("{s:?} (expected zeros or maxes)"),
            )),
        }
    }
}

/// `|PP(λ; m)|` from the determinant at `x = 1`, or the trivial `(m+1)^|λ|`
/// bound when the shape has too many rows for the determinant.
pub fn estimate_pp_count(shape: &Partition, max: usize) -> u128 {
    if shape.len() <= MAX_DET_SIZE {
        if let Ok(det) = det_division_free(&lgv_matrix(shape, max)) {
            return det.eval_at_one().to_u128().unwrap_or(u128::MAX);
        }
    }
    BigInt::from(max + 1)
        .pow(shape.size() as u32)
        .to_u128()
        .unwrap_or(u128::MAX)
}

/// `|SSYT(λ, n)|` as the non-intersecting path count `det C(n, μ_j - j + i)`
/// with `μ = λ'`, falling back to `n^|λ|` for wide shapes.
pub fn estimate_ssyt_count(shape: &Partition, vars: usize) -> u128 {
    let mu = shape.transpose();
    if mu.len() <= MAX_DET_SIZE {
        let m = PolyMatrix::from_fn(mu.len(), |i, j| {
            UniPoly::constant(binomial(
                vars as i64,
                mu.parts()[j] as i64 - j as i64 + i as i64,
            ))
        });
        if let Ok(det) = det_division_free(&m) {
            return det.eval_at_one().to_u128().unwrap_or(u128::MAX);
        }
    }
    BigInt::from(vars)
        .pow(shape.size() as u32)
        .to_u128()
        .unwrap_or(u128::MAX)
}

/// `Σ_{P ∈ PP(λ; m)} x^{stat(P)}` by exhaustive enumeration.
pub fn genfun_brute(
    shape: &Partition,
    max: usize,
    which: RowStatistic,
    guard: &Guard,
) -> Result<UniPoly> {
    guard.check(
        &format!("PP({shape}; {max})"),
        estimate_pp_count(shape, max),
    )?;
    let mut tally = vec![0u64; shape.len() + 1];
    for p in enumerate_pp(shape, max) {
        tally[which.eval(&p)] += 1;
    }
    Ok(UniPoly::from_coeffs(
        tally.into_iter().map(BigInt::from).collect(),
    ))
}

/// `s_λ(x_1, …, x_n)` as a sum of tableau monomials.
pub fn schur_brute(shape: &Partition, vars: usize, guard: &Guard) -> Result<MultiPoly> {
    if vars == 0 {
        return Err(Error::invalid("schur", "needs at least one variable"));
    }
    guard.check(
        &format!("SSYT({shape}, {vars})"),
        estimate_ssyt_count(shape, vars),
    )?;
    let mut s = MultiPoly::zero(vars);
    for t in enumerate_ssyt(shape, vars) {
        s.add_term(t.weight(), BigInt::from(1));
    }
    Ok(s)
}
