//! Expansion of symmetric functions into polynomials in finitely many
//! variables. Independent of the power-sum machinery: Schur functions are
//! summed over semistandard tableaux.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{Rational, SymmetricFunction};

/// Exponent vector (one entry per variable) to coefficient.
pub type Polynomial = BTreeMap<Vec<u32>, Rational>;

fn add_into(acc: &mut Polynomial, key: Vec<u32>, c: Rational) {
    let entry = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// Content vectors of all semistandard tableaux of shape `lambda` with
/// entries in `0..v`, with multiplicity.
pub fn ssyt_contents(lambda: &Partition, v: usize) -> Vec<Vec<u32>> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    let mut content = vec![0u32; v];
    fill(&cells, 0, &mut grid, &mut content, v, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    grid: &mut [Vec<usize>],
    content: &mut [u32],
    v: usize,
    out: &mut Vec<Vec<u32>>,
) {
    let Some(&(r, c)) = cells.get(at) else {
        out.push(content.to_vec());
        return;
    };
    let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    for x in lo_row.max(lo_col)..v {
        grid[r][c] = x;
        content[x] += 1;
        fill(cells, at + 1, grid, content, v, out);
        content[x] -= 1;
    }
}

/// `f(x_1, ..., x_v)`. Requires `v` at least the top degree of `f` so that
/// distinct functions give distinct polynomials.
pub fn monomial_expand(f: &SymmetricFunction, v: usize) -> Result<Polynomial> {
    let f = f.to_schur();
    if let Some(deg) = f.max_degree() {
        if v < deg {
            return Err(Error::TooFewVariables(v, deg));
        }
    }
    Ok(monomial_restrict(&f, v))
}

/// `f(x_1, ..., x_v, 0, 0, ...)` for any `v`. This is a ring map that commutes
/// with plethysm, but it forgets Schur terms with more than `v` rows.
pub fn monomial_restrict(f: &SymmetricFunction, v: usize) -> Polynomial {
    let f = f.to_schur();
    let mut out = Polynomial::new();
    for (lambda, c) in f.terms() {
        for content in ssyt_contents(lambda, v) {
            add_into(&mut out, content, c.clone());
        }
    }
    out
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            add_into(&mut out, key, ca * cb);
        }
    }
    out
}

fn poly_pow_monomial(exps: &[&Vec<u32>], counts: &[u32], v: usize) -> Vec<u32> {
    let mut key = vec![0u32; v];
    for (e, &k) in exps.iter().zip(counts) {
        for (slot, x) in key.iter_mut().zip(e.iter()) {
            *slot += x * k;
        }
    }
    key
}

/// `f[g]` evaluated in `v` variables by substituting the monomials of `g`,
/// repeated by multiplicity, as the alphabet of `f`. `g` must have
/// nonnegative integer coefficients and no constant term.
pub fn plethysm_oracle(f: &SymmetricFunction, g: &SymmetricFunction, v: usize) -> Result<Polynomial> {
    let g_poly = monomial_restrict(g, v);
    let mut alphabet: Vec<&Vec<u32>> = Vec::new();
    for (key, c) in &g_poly {
        if !c.is_integer() || c < &Rational::zero() {
            return Err(Error::InvalidParams(format!("coefficient {c} is not a nonnegative integer")));
        }
        if key.iter().all(|&x| x == 0) {
            return Err(Error::InvalidParams("inner function has a constant term".into()));
        }
        let times = c.to_integer().try_into().unwrap_or(0usize);
        alphabet.extend(std::iter::repeat_n(key, times));
    }
    let f = f.to_schur();
    let mut out = Polynomial::new();
    for (lambda, c) in f.terms() {
        for content in ssyt_contents(lambda, alphabet.len()) {
            add_into(&mut out, poly_pow_monomial(&alphabet, &content, v), c.clone());
        }
    }
    Ok(out)
}
