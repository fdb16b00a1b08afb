use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use serde_json::json;

use super::report::to_value;
use super::{Check, Instance, StatisticReport};
use crate::algebra::{det_division_free, lgv_matrix};
use crate::bijections::{phi_lgv, swap_certificate, tail_swap, SchurSymmetryMap};
use crate::error::Result;
use crate::guard::Guard;
use crate::objects::{enumerate_ssyt, genfun_brute, schur_brute, Partition, RowStatistic};
use crate::paths::{enumerate_families, eta1, eta2, Endpoints, SignedPathFamily};
use crate::perm::{Permutation, Sign};
use crate::sijection::{check_compatibility, check_sijection, Statistic};

/// Brute-force zeros and maxes generating functions against the determinant.
pub fn verify_theorem1(shape: &Partition, max: usize, guard: &Guard) -> Result<StatisticReport> {
    let clock = Instant::now();
    let mut r = StatisticReport::new("verify-theorem1", Instance::bounded(shape.clone(), max));
    let zeros = genfun_brute(shape, max, RowStatistic::Zeros, guard)?;
    let maxes = genfun_brute(shape, max, RowStatistic::Maxes, guard)?;
    let det = det_division_free(&lgv_matrix(shape, max))?;
    r.result("brute-zeros", &zeros);
    r.result("brute-maxes", &maxes);
    r.result("det", &det);
    r.result("count", det.eval_at_one().to_string());

    for (name, left, right) in [
        ("brute-zeros = brute-maxes", &zeros, &maxes),
        ("brute-zeros = det", &zeros, &det),
    ] {
        r.checks.push(if left == right {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                json!({ "left": left, "right": right, "difference": left - right }),
            )
        });
    }
    r.runtime = clock.elapsed();
    Ok(r)
}

/// Tail-swap involution, `Φ` bijectivity and compatibility, and the signed count.
pub fn verify_lgv(shape: &Partition, max: usize, guard: &Guard) -> Result<StatisticReport> {
    let clock = Instant::now();
    let mut r = StatisticReport::new("verify-lgv", Instance::bounded(shape.clone(), max));
    let ends = Arc::new(Endpoints::plane_partition(shape, max));
    let families: Vec<SignedPathFamily> = enumerate_families(&ends, guard)?.collect();

    let ni: Vec<&SignedPathFamily> = families.iter().filter(|f| f.is_nonintersecting()).collect();
    let plus = families.iter().filter(|f| f.sign() == Sign::Plus).count();
    let minus = families.len() - plus;
    let det_at_one = det_division_free(&lgv_matrix(shape, max))?.eval_at_one();
    r.result("families", families.len());
    r.result("nonintersecting", ni.len());
    r.result("paired", families.len() - ni.len());
    r.result("positive", plus);
    r.result("negative", minus);
    r.result("det-at-one", det_at_one.to_string());

    r.checks.push(Check::from_result(
        "tail-swap involution",
        families
            .iter()
            .filter(|f| !f.is_nonintersecting())
            .try_for_each(check_tail_swap),
    ));
    r.checks.push(Check::from_result(
        "non-intersecting forces identity",
        match ni.iter().find(|f| !f.sigma().is_identity()) {
            Some(f) => Err(json!({ "family": f })),
            None => Ok(()),
        },
    ));
    let signed = plus as i64 - minus as i64;
    r.checks.push(Check::from_result(
        "signed count = non-intersecting = det(1)",
        if signed == ni.len() as i64 && det_at_one == signed.into() {
            Ok(())
        } else {
            Err(json!({ "signed": signed, "nonintersecting": ni.len(), "det-at-one": det_at_one.to_string() }))
        },
    ));

    let phi = phi_lgv(ends);
    let report = check_sijection(&phi, guard)?;
    r.checks.push(Check::from_result(
        "phi check_sijection",
        match report.violation {
            Some(v) => Err(to_value(v)),
            None => Ok(()),
        },
    ));
    for (name, eta) in [
        ("eta1", eta1 as fn(&SignedPathFamily) -> usize),
        ("eta2", eta2),
    ] {
        let s = Statistic::new(name, eta);
        let t = Statistic::new(name, eta);
        let report = check_compatibility(&phi, &s, &t, guard)?;
        r.checks.push(Check::from_result(
            format!("phi compatible with {name}"),
            match report.violation {
                Some(v) => Err(to_value(v)),
                None => Ok(()),
            },
        ));
    }
    r.runtime = clock.elapsed();
    Ok(r)
}

fn check_tail_swap(f: &SignedPathFamily) -> std::result::Result<(), serde_json::Value> {
    let fail = |reason: &str| json!({ "family": f, "reason": reason });
    let (g, cert) = tail_swap(f).map_err(|e| fail(&e.to_string()))?;
    if g.sign() != f.sign().flip() {
        return Err(fail("sign not reversed"));
    }
    if g.is_nonintersecting() {
        return Err(fail("image is non-intersecting"));
    }
    if g.edge_multiset() != f.edge_multiset() {
        return Err(fail("edge multiset changed"));
    }
    if swap_certificate(&g) != Some(cert) {
        return Err(fail("certificate changed"));
    }
    match tail_swap(&g) {
        Ok((back, _)) if back == *f => Ok(()),
        _ => Err(fail("not an involution")),
    }
}

/// `s_λ` by enumeration, its invariance under `σ`, and the weight-permuting
/// bijection built from direction permutation.
pub fn verify_schur(
    shape: &Partition,
    vars: usize,
    sigma: &Permutation,
    guard: &Guard,
) -> Result<StatisticReport> {
    let clock = Instant::now();
    let mut r = StatisticReport::new("schur", Instance::schur(shape.clone(), vars));
    let schur = schur_brute(shape, vars, guard)?;
    r.result("schur", &schur);
    r.result("permutation", sigma);

    let permuted = schur.permute_vars(sigma)?;
    r.checks.push(if permuted == schur {
        Check::pass("polynomial invariant")
    } else {
        Check::fail("polynomial invariant", json!({ "permuted": permuted }))
    });

    let map = SchurSymmetryMap::new(shape.clone(), vars, sigma.clone())?;
    let mut seen = HashSet::new();
    let mut weights = Ok(());
    let mut injective = Ok(());
    let mut count = 0usize;
    for t in enumerate_ssyt(shape, vars) {
        count += 1;
        let u = map.apply(&t)?;
        let (w, v) = (t.weight(), u.weight());
        if weights.is_ok() && (0..vars).any(|i| v[sigma.apply(i)] != w[i]) {
            weights = Err(json!({ "tableau": t, "image": u }));
        }
        if !seen.insert(u.clone()) && injective.is_ok() {
            injective = Err(json!({ "tableau": t, "image": u }));
        }
    }
    r.result("tableaux", count);
    r.checks
        .push(Check::from_result("map is a bijection", injective));
    r.checks
        .push(Check::from_result("weights permuted", weights));
    r.runtime = clock.elapsed();
    Ok(r)
}
