//! The graded pieces `l_n`, `π_n`, and the hook series `U_k`, plus their
//! truncated sums.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Basis, SymmetricFunction};
use crate::partitions::Partition;

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `l_n = (1/n) Σ_{d | n} μ(d) p_d^{n/d}`, the characteristic of the Lie
/// representation, in the power-sum basis.
pub fn lie(n: usize) -> SymmetricFunction {
    assert!(n >= 1, "l_n is defined for n >= 1");
    let terms = (1..=n).filter(|d| n % d == 0).filter_map(|d| {
        let mu = mobius(d);
        (mu != 0).then(|| {
            let key = Partition::from_vec_unchecked(vec![d as u32; n / d]);
            (key, BigRational::new(BigInt::from(mu), BigInt::from(n)))
        })
    });
    SymmetricFunction::from_terms(Basis::Power, terms)
}

/// `π_n = ω(l_n)`, the characteristic of the top reduced homology of the
/// proper part of the partition lattice.
pub fn pi(n: usize) -> SymmetricFunction {
    lie(n).omega()
}

/// `Σ_{j=1}^{D} l_j`.
pub fn lie_series(max_degree: usize) -> SymmetricFunction {
    let mut out = SymmetricFunction::zero(Basis::Power);
    for j in 1..=max_degree {
        out += &lie(j);
    }
    out
}

/// `Σ_{j=1}^{D} (-1)^j π_j`.
pub fn pi_signed_series(max_degree: usize) -> SymmetricFunction {
    let mut out = SymmetricFunction::zero(Basis::Power);
    for j in 1..=max_degree {
        let term = pi(j);
        if j % 2 == 1 {
            out += &(-term);
        } else {
            out += &term;
        }
    }
    out
}

/// `U_k = Σ_{k <= j <= D} s_{(j-k+1, 1^{k-1})}` in the Schur basis.
pub fn u_series(k: usize, max_degree: usize) -> SymmetricFunction {
    assert!(k >= 1);
    let terms = (k..=max_degree).map(|j| (Partition::hook(j - k + 1, k - 1), super::rat(1)));
    SymmetricFunction::from_terms(Basis::Schur, terms)
}
