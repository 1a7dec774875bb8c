//! Plethysm through the power-sum basis.
//!
//! `p_m[g]` replaces every `p_k` in the power-sum expansion of `g` by `p_{mk}`
//! and leaves rational scalars untouched, so `p_m[-g] = -p_m[g]`. This is the
//! lambda-ring convention; `f[g]` then follows by multiplicativity and
//! linearity in `f`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Basis, SymmetricFunction};

/// The Adams operation `p_m[g]`, returned in the power-sum basis.
pub fn adams(m: usize, g: &SymmetricFunction) -> SymmetricFunction {
    assert!(m >= 1);
    let g = g.to_power();
    SymmetricFunction::from_terms(
        Basis::Power,
        g.terms().iter().map(|(k, v)| (k.scale(m as u32), v.clone())),
    )
}

/// `f[g]`, exact, in the basis of `f`.
pub fn plethysm(f: &SymmetricFunction, g: &SymmetricFunction) -> SymmetricFunction {
    plethysm_truncated(f, g, None).in_basis(f.basis())
}

/// `f[g]` with every term of degree above `max_degree` dropped, in the
/// power-sum basis. Degrees only add under products, so truncating each
/// factor early is exact for the retained degrees.
pub fn plethysm_truncated(f: &SymmetricFunction, g: &SymmetricFunction, max_degree: Option<usize>) -> SymmetricFunction {
    let f = f.to_power();
    let g = match max_degree {
        Some(d) => g.to_power().truncate(d),
        None => g.to_power(),
    };
    let min_g = g.terms().keys().map(|k| k.size()).min();

    let mut parts: Vec<usize> = f.terms().keys().flat_map(|k| k.parts().iter().map(|&p| p as usize)).collect();
    parts.sort_unstable();
    parts.dedup();
    let adams_cache: HashMap<usize, SymmetricFunction> = parts
        .into_iter()
        .map(|m| {
            let a = adams(m, &g);
            (m, match max_degree {
                Some(d) => a.truncate(d),
                None => a,
            })
        })
        .collect();

    let pieces: Vec<SymmetricFunction> = f
        .terms()
        .par_iter()
        .filter(|(mu, _)| {
            // each factor p_m[g] has degree at least m * min_g
            match (max_degree, min_g) {
                (Some(d), Some(lo)) if lo > 0 => mu.size() * lo <= d,
                _ => true,
            }
        })
        .map(|(mu, c)| {
            let mut acc = SymmetricFunction::one(Basis::Power);
            for &m in mu.parts() {
                acc = acc.mul_power(&adams_cache[&(m as usize)], max_degree);
                if acc.is_zero() {
                    break;
                }
            }
            acc.scale(c)
        })
        .collect();

    let mut out = SymmetricFunction::zero(Basis::Power);
    for piece in pieces {
        out += &piece;
    }
    out
}
