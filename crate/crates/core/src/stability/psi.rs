//! The summands `ψ_{n,q,r,t}` of the k-equal characteristic.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use serde::Serialize;

use super::check_dk;
use crate::error::Result;
use crate::symfunc::{lie_series, pi_signed_series, plethysm_truncated, u_series, SymmetricFunction};

/// One summand index. `i` is derived: `i = (d-1)(n-r-q) + t(k-2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PsiParams {
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub t: usize,
    pub d: usize,
    pub k: usize,
}

impl PsiParams {
    pub fn new(n: usize, q: usize, r: usize, t: usize, d: usize, k: usize) -> Result<Self> {
        check_dk(d, k)?;
        if n == 0 || r == 0 || t == 0 {
            return Err(crate::Error::InvalidParams(format!("need n, r, t >= 1 (got n={n}, r={r}, t={t})")));
        }
        Ok(PsiParams { n, q, r, t, d, k })
    }

    /// `(d-1)(n-r-q) + t(k-2)`; negative values are outside the lemma.
    pub fn i(&self) -> i64 {
        let s = self.n as i64 - (self.r + self.q) as i64;
        (self.d as i64 - 1) * s + (self.t * (self.k - 2)) as i64
    }

    pub fn case(&self) -> PsiCase {
        PsiCase::of(self.d, self.k)
    }
}

/// Which of the three parity formulas applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PsiCase {
    /// `d` even: `ω(ω^k(e_r[Σ l_j])|_t [U_k])`.
    DEven,
    /// `d` odd, `k` even: `h_r[Σ l_j]|_t [U_k]`.
    DOddKEven,
    /// `d`, `k` odd: `((-1)^t h_r[Σ (-1)^j π_j])|_t [U_k]`.
    DOddKOdd,
}

impl PsiCase {
    pub fn of(d: usize, k: usize) -> Self {
        match (d % 2, k % 2) {
            (0, _) => PsiCase::DEven,
            (_, 0) => PsiCase::DOddKEven,
            _ => PsiCase::DOddKOdd,
        }
    }
}

/// The degree-`t` coefficient function plugged into `U_k`.
fn inner(case: PsiCase, k: usize, r: usize, t: usize) -> SymmetricFunction {
    match case {
        PsiCase::DEven => {
            let e_r = SymmetricFunction::e(r);
            plethysm_truncated(&e_r, &lie_series(t), Some(t)).homogeneous_part(t).omega_pow(k)
        }
        PsiCase::DOddKEven => {
            let h_r = SymmetricFunction::h(r);
            plethysm_truncated(&h_r, &lie_series(t), Some(t)).homogeneous_part(t)
        }
        PsiCase::DOddKOdd => {
            let h_r = SymmetricFunction::h(r);
            let f = plethysm_truncated(&h_r, &pi_signed_series(t), Some(t)).homogeneous_part(t);
            if t % 2 == 1 {
                -f
            } else {
                f
            }
        }
    }
}

type OuterKey = (PsiCase, usize, usize, usize);

/// `inner[U_k]` truncated at the stored degree, power-sum basis.
static OUTER: LazyLock<RwLock<HashMap<OuterKey, (usize, Arc<SymmetricFunction>)>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Schur-basis homogeneous parts, keyed by `(case, k, r, t, degree)`.
static PARTS: LazyLock<RwLock<HashMap<(OuterKey, usize), Arc<SymmetricFunction>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn outer_truncated(key: OuterKey, degree: usize) -> Arc<SymmetricFunction> {
    if let Some((have, f)) = OUTER.read().expect("psi cache").get(&key) {
        if *have >= degree {
            return f.clone();
        }
    }
    let (case, k, r, t) = key;
    let f = Arc::new(plethysm_truncated(&inner(case, k, r, t), &u_series(k, degree), Some(degree)));
    let mut cache = OUTER.write().expect("psi cache");
    let entry = cache.entry(key).or_insert_with(|| (degree, f.clone()));
    if entry.0 < degree {
        *entry = (degree, f.clone());
    }
    f
}

/// Degree-`degree` part of `inner[U_k]` in the Schur basis, with the outer
/// `ω` already applied when `d` is even.
pub fn psi_degree_part(case: PsiCase, k: usize, r: usize, t: usize, degree: usize) -> Arc<SymmetricFunction> {
    let key = ((case, k, r, t), degree);
    if let Some(hit) = PARTS.read().expect("psi cache").get(&key) {
        return hit.clone();
    }
    let part = outer_truncated(key.0, degree).homogeneous_part(degree);
    let part = match case {
        PsiCase::DEven => part.omega(),
        _ => part,
    };
    let part = Arc::new(part.to_schur());
    PARTS.write().expect("psi cache").insert(key, part.clone());
    part
}

/// Fills the caches for every `(r, t)` that can occur up to `max_n`, so that
/// later calls at smaller degrees reuse one plethysm.
pub fn warm_cache(d: usize, k: usize, max_n: usize) {
    use rayon::prelude::*;
    let case = PsiCase::of(d, k);
    let keys: Vec<(usize, usize)> = (1..=max_n / k).flat_map(|t| (1..=t).map(move |r| (r, t))).collect();
    keys.par_iter().for_each(|&(r, t)| {
        outer_truncated((case, k, r, t), max_n);
    });
}

/// `ψ_{n,q,r,t}`, homogeneous of degree `n` in the Schur basis.
pub fn psi(p: &PsiParams) -> SymmetricFunction {
    // no shortcut for r > t or tk > n: those vanish by degree, and the
    // property tests rely on the formula itself
    if p.q > p.n {
        return SymmetricFunction::zero(crate::symfunc::Basis::Schur);
    }
    let part = psi_degree_part(p.case(), p.k, p.r, p.t, p.n - p.q);
    &*part * &SymmetricFunction::h(p.q)
}
