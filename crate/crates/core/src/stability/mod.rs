//! The k-equal cohomology characteristics as symmetric functions, the
//! stabilization predicate `V_n = V_{n-1} + □`, the known stability bounds,
//! and a search for sharp bounds certified up to the theorem horizon.

mod psi;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{lattice_orbits, orbit_contribution, sw_complement_char};
use crate::partitions::{LambdaSet, Partition};
use crate::symfunc::{Basis, Rational, SymmetricFunction};

pub use psi::{psi, psi_degree_part, warm_cache, PsiCase, PsiParams};
pub use report::{sharp_bound_certified, sharp_bound_with_horizon, theorem_horizon, SharpBound, StabilityReport};

pub(crate) fn check_dk(d: usize, k: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} must be at least 2")));
    }
    if k < d + 1 {
        return Err(Error::InvalidParams(format!("k = {k} must be at least d + 1 = {}", d + 1)));
    }
    Ok(())
}

/// The admissible `(q, r, t)` for given `n, i, d, k`: `1 <= r <= t <= n/k`,
/// `q >= 0` solving `i = (d-1)(n-r-q) + t(k-2)`.
pub fn admissible_params(n: usize, i: usize, d: usize, k: usize) -> Vec<PsiParams> {
    let mut out = Vec::new();
    for t in 1..=n / k {
        let rest = i as isize - (t * (k - 2)) as isize;
        if rest < 0 || rest % (d as isize - 1) != 0 {
            continue;
        }
        let s = rest as usize / (d - 1); // n - r - q
        for r in 1..=t {
            if let Some(q) = n.checked_sub(r + s) {
                out.push(PsiParams { n, q, r, t, d, k });
            }
        }
    }
    out
}

/// Characteristic of `H̃^i` of the complement of the `k`-equal arrangement in
/// `(R^d)^n`, as `Σ ψ_{n,q,r,t}` over the admissible parameters.
pub fn kequal_char(n: usize, i: usize, d: usize, k: usize) -> Result<SymmetricFunction> {
    check_dk(d, k)?;
    let pieces: Vec<SymmetricFunction> = admissible_params(n, i, d, k).par_iter().map(psi).collect();
    let mut total = SymmetricFunction::zero(Basis::Schur);
    for p in &pieces {
        total += p;
    }
    Ok(total)
}

/// Whether `v_n = v_prev + □`. Both must be homogeneous Schur-basis
/// functions of consecutive degrees (zero fits any degree).
pub fn is_stable_step(v_n: &SymmetricFunction, v_prev: &SymmetricFunction) -> Result<bool> {
    let v_n = v_n.to_schur();
    let v_prev = v_prev.to_schur();
    let deg_n = v_n.homogeneous_degree()?;
    let deg_prev = v_prev.homogeneous_degree()?;
    if let (Some(a), Some(b)) = (deg_n, deg_prev) {
        if a != b + 1 {
            return Err(Error::DegreeMismatch { expected: b + 1, found: a });
        }
    }
    Ok(v_n == v_prev.add_box()?)
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Bounds past which the k-equal sequence is known to be stable:
/// `2i/(d-1)`, and `ki/(k-d-1)` as well when `d` is even and `k >= d+2`.
pub fn theorem_bounds(d: usize, k: usize, i: usize) -> Result<Vec<Rational>> {
    check_dk(d, k)?;
    let mut out = vec![ratio(2 * i, d - 1)];
    if d % 2 == 0 && k >= d + 2 {
        out.push(ratio(k * i, k - d - 1));
    }
    Ok(out)
}

/// `4(i + 1 - rank Λ)/(d - 1)`; may be negative.
pub fn general_bound(lambda: &LambdaSet, i: usize, d: usize) -> Result<Rational> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} must be at least 2")));
    }
    let num = 4 * (i as i64 + 1 - lambda.rank() as i64);
    Ok(Rational::new(BigInt::from(num), BigInt::from(d as i64 - 1)))
}

/// `ch H̃^i` of the complement of the arrangement of type `Λ^{(n)}` in
/// `(R^d)^n`, from the lattice oracle.
pub fn lambda_char_smalln(n: usize, d: usize, lambda: &LambdaSet, i: usize, limit: usize) -> Result<SymmetricFunction> {
    let types: BTreeSet<Partition> = lambda.extend(n)?;
    sw_complement_char(n, d, &types, i, limit)
}

/// Types generating the part of `Π_Λ` that lives on `m` non-singleton
/// points: the non-one parts of each base partition, padded to `m`.
fn core_types(lambda: &LambdaSet, m: usize) -> BTreeSet<Partition> {
    lambda
        .base()
        .iter()
        .map(Partition::without_ones)
        .filter(|core| core.size() <= m)
        .map(|core| {
            let pad = m - core.size();
            core.pad_ones(pad)
        })
        .collect()
}

/// `f_μ̃` for every singleton-free type `μ̃` with `|μ̃| <= max_m`: the
/// contribution of one orbit of `Π_Λ` computed on `|μ̃|` points. Zero
/// contributions are omitted.
pub fn singleton_free_parts(
    d: usize,
    lambda: &LambdaSet,
    i: usize,
    max_m: usize,
    limit: usize,
) -> Result<BTreeMap<Partition, SymmetricFunction>> {
    let mut out = BTreeMap::new();
    for m in 2..=max_m {
        let types = core_types(lambda, m);
        if types.is_empty() {
            continue;
        }
        for orbit in lattice_orbits(m, &types, limit)?.iter() {
            let ty = orbit.representative.type_partition();
            if ty.multiplicity(1) > 0 {
                continue;
            }
            if let Some(f) = orbit_contribution(orbit, d, i) {
                if !f.is_zero() {
                    out.insert(ty, f);
                }
            }
        }
    }
    Ok(out)
}

/// The same characteristic as [`lambda_char_smalln`], assembled as
/// `Σ_μ̃ h_{n-|μ̃|} f_μ̃` from lattices without singleton blocks.
pub fn lambda_char_decomposed(n: usize, d: usize, lambda: &LambdaSet, i: usize, limit: usize) -> Result<SymmetricFunction> {
    lambda.extend(n)?;
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let mut total = SymmetricFunction::zero(Basis::Schur);
    for (mu, f) in singleton_free_parts(d, lambda, i, n, limit)? {
        total += &(&f * &SymmetricFunction::h(n - mu.size()));
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
