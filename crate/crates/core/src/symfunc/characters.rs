//! Irreducible characters of the symmetric groups and the Murnaghan-Nakayama
//! rule, phrased on beta-sets (abacus positions).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// First-column hook lengths shifted by `len`, i.e. `λ_i + len - 1 - i`.
fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (len - 1 - i)) as u32)
        .collect();
    Partition::from_unsorted(parts)
}

/// All `λ + R` for border strips `R` of size `m`, with the height of each strip
/// (number of rows minus one).
pub fn ribbons_addable(lambda: &Partition, m: usize) -> Vec<(Partition, usize)> {
    assert!(m > 0);
    let len = lambda.length() + m;
    let beta = beta_set(lambda, len);
    let mut occupied = vec![false; beta[0] + m + 1];
    for &b in &beta {
        occupied[b] = true;
    }
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if occupied[b + m] {
            continue;
        }
        let height = occupied[b + 1..b + m].iter().filter(|&&x| x).count();
        let mut next = beta.clone();
        next[idx] = b + m;
        out.push((from_beta_set(next), height));
    }
    out
}

/// All `λ - R` for border strips `R` of size `m`, with their heights.
pub fn ribbons_removable(lambda: &Partition, m: usize) -> Vec<(Partition, usize)> {
    assert!(m > 0);
    let len = lambda.length();
    let beta = beta_set(lambda, len);
    let mut occupied = vec![false; beta.first().map_or(0, |b| b + 1)];
    for &b in &beta {
        occupied[b] = true;
    }
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < m || occupied[b - m] {
            continue;
        }
        let height = occupied[b - m + 1..b].iter().filter(|&&x| x).count();
        let mut next = beta.clone();
        next[idx] = b - m;
        out.push((from_beta_set(next), height));
    }
    out
}

type CharKey = (Partition, Partition);

static CHARACTERS: LazyLock<RwLock<HashMap<CharKey, BigInt>>> = LazyLock::new(Default::default);

/// `χ^λ(μ)`, the irreducible character `λ` at cycle type `μ`; zero when sizes differ.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = CHARACTERS.read().expect("character cache poisoned").get(&key) {
        return v.clone();
    }
    let first = mu.part(0);
    let rest = Partition::from_vec_unchecked(mu.parts()[1..].to_vec());
    let mut total = BigInt::zero();
    for (smaller, height) in ribbons_removable(lambda, first) {
        let chi = character(&smaller, &rest);
        if height % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    CHARACTERS.write().expect("character cache poisoned").insert(key, total.clone());
    total
}

/// `z_μ = Π_i i^{m_i} m_i!`, the centraliser order of a permutation of type `μ`.
pub fn z_coefficient(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

type Expansion = Arc<Vec<(Partition, BigInt)>>;

static POWER_SUMS: LazyLock<RwLock<HashMap<Partition, Expansion>>> = LazyLock::new(Default::default);

/// Schur expansion of `p_μ`, i.e. `Σ_λ χ^λ(μ) s_λ`, built by adding one
/// border strip per part of `μ`.
pub fn power_sum_in_schur(mu: &Partition) -> Expansion {
    if let Some(v) = POWER_SUMS.read().expect("power-sum cache poisoned").get(mu) {
        return Arc::clone(v);
    }
    let result = if mu.is_empty() {
        Arc::new(vec![(Partition::empty(), BigInt::one())])
    } else {
        let parts = mu.parts();
        let last = parts[parts.len() - 1] as usize;
        let prefix = Partition::from_vec_unchecked(parts[..parts.len() - 1].to_vec());
        let base = power_sum_in_schur(&prefix);
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (lambda, c) in base.iter() {
            for (bigger, height) in ribbons_addable(lambda, last) {
                let entry = acc.entry(bigger).or_insert_with(BigInt::zero);
                if height % 2 == 0 {
                    *entry += c;
                } else {
                    *entry -= c;
                }
            }
        }
        Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    };
    POWER_SUMS
        .write()
        .expect("power-sum cache poisoned")
        .insert(mu.clone(), Arc::clone(&result));
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::partitions_of;

    /// Number of standard Young tableaux via the hook length formula.
    fn hook_length_count(lambda: &Partition) -> BigInt {
        let conj = lambda.conjugate();
        let mut denom = BigInt::one();
        for (i, &row) in lambda.parts().iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as usize - j + conj.part(j) - i - 1;
                denom *= BigInt::from(hook);
            }
        }
        let mut num = BigInt::one();
        for k in 1..=lambda.size() {
            num *= BigInt::from(k);
        }
        num / denom
    }

    #[test]
    fn ribbon_examples() {
        let mut added: Vec<_> = ribbons_addable(&part![1], 2);
        added.sort();
        // [2,1]/[1] is disconnected, so it is not a border strip.
        assert_eq!(added, vec![(part![1, 1, 1], 1), (part![3], 0)]);
        let mut removed = ribbons_removable(&part![3, 1], 2);
        removed.sort();
        assert_eq!(removed, vec![(part![1, 1], 0)]);
        assert_eq!(ribbons_removable(&part![2, 2], 3), vec![(part![1], 1)]);
        assert_eq!(ribbons_removable(&part![2, 2], 2).len(), 2);
        // [2,2] contains a 2x2 square, so it is not a border strip
        assert!(ribbons_removable(&part![2, 2], 4).is_empty());
    }

    #[test]
    fn s3_character_table() {
        // rows [3], [2,1], [1,1,1]; columns (1^3), (2,1), (3)
        let classes = [part![1, 1, 1], part![2, 1], part![3]];
        let expected = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        for (lambda, row) in [part![3], part![2, 1], part![1, 1, 1]].iter().zip(expected) {
            for (mu, want) in classes.iter().zip(row) {
                assert_eq!(character(lambda, mu), BigInt::from(want), "chi^{lambda}({mu})");
            }
        }
    }

    #[test]
    fn identity_column_is_hook_length_formula() {
        for n in 0..=9 {
            for lambda in partitions_of(n, None) {
                assert_eq!(character(&lambda, &Partition::column(n)), hook_length_count(&lambda));
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let all: Vec<_> = partitions_of(n, None).collect();
            for mu in &all {
                for nu in &all {
                    let s: BigInt = all.iter().map(|l| character(l, mu) * character(l, nu)).sum();
                    let want = if mu == nu { z_coefficient(mu) } else { BigInt::zero() };
                    assert_eq!(s, want, "columns {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn power_sum_expansion_matches_character_table() {
        for n in 0..=8 {
            for mu in partitions_of(n, None) {
                let expansion: BTreeMap<_, _> = power_sum_in_schur(&mu).iter().cloned().collect();
                for lambda in partitions_of(n, None) {
                    let got = expansion.get(&lambda).cloned().unwrap_or_default();
                    assert_eq!(got, character(&lambda, &mu));
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_coefficient(&part![1, 1, 1]), BigInt::from(6));
        assert_eq!(z_coefficient(&part![2, 1]), BigInt::from(2));
        assert_eq!(z_coefficient(&part![2, 2]), BigInt::from(8));
        assert_eq!(z_coefficient(&Partition::empty()), BigInt::one());
    }
}
