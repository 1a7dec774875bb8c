//! Inputs shared by the benches.

use repstab_core::{Partition, SymmetricFunction};

/// `(n, n-1, ..., 1)`.
pub fn staircase(n: u32) -> Partition {
    Partition::new((1..=n).rev().collect()).expect("staircase is a partition")
}

/// Sum of every power sum `p_μ` with `|μ| = n`.
pub fn all_power_sums(n: usize) -> SymmetricFunction {
    let mut f = SymmetricFunction::zero(repstab_core::Basis::Power);
    for mu in repstab_core::partitions::partitions_of(n, None) {
        f += &SymmetricFunction::p(mu);
    }
    f
}
