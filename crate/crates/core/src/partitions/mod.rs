//! Integer partitions, set partitions and the base sets `Λ` that select a
//! diagonal arrangement.

mod partition;
mod set_partition;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use partition::{partitions_of, Partition, PartitionsOf};
pub use set_partition::{set_partitions, set_partitions_of_types, SetPartition};

use crate::error::{Error, Result};

/// A nonempty set of partitions of a common size `n0`, none of them `(1^{n0})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaSet {
    base: BTreeSet<Partition>,
    n0: usize,
}

impl LambdaSet {
    pub fn new<I: IntoIterator<Item = Partition>>(parts: I) -> Result<Self> {
        let base: BTreeSet<Partition> = parts.into_iter().collect();
        let n0 = match base.iter().next() {
            Some(p) => p.size(),
            None => return Err(Error::InvalidLambdaSet("empty set".into())),
        };
        if n0 == 0 {
            return Err(Error::InvalidLambdaSet("partitions of 0 are not allowed".into()));
        }
        if let Some(bad) = base.iter().find(|p| p.size() != n0) {
            return Err(Error::InvalidLambdaSet(format!("{bad} has size {}, expected {n0}", bad.size())));
        }
        if base.iter().any(|p| p.rank() == 0) {
            return Err(Error::InvalidLambdaSet(format!("(1^{n0}) is not allowed")));
        }
        Ok(LambdaSet { base, n0 })
    }

    /// The single-member set `{(k)}`, whose extensions are the `k`-equal arrangements.
    pub fn k_equal(k: usize) -> Result<Self> {
        Self::new([Partition::row(k)])
    }

    pub fn base(&self) -> &BTreeSet<Partition> {
        &self.base
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    /// `min rank(λ)` over the members.
    pub fn rank(&self) -> usize {
        self.base.iter().map(Partition::rank).min().expect("nonempty")
    }

    /// `Λ^{(n)}`: every member padded with `n - n0` parts equal to one.
    pub fn extend(&self, n: usize) -> Result<BTreeSet<Partition>> {
        if n < self.n0 {
            return Err(Error::BelowBaseSize { n, n0: self.n0 });
        }
        Ok(self.base.iter().map(|p| p.pad_ones(n - self.n0)).collect())
    }
}

/// Semicolon separated partition literals, e.g. `[2,2];[3,1]`.
/// `"[2,2];[3]"`. Members of different sizes are padded with ones up to the
/// largest, so this reads as `{(2,2), (3,1)}`.
impl FromStr for LambdaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        let n0 = parts.iter().map(Partition::size).max().unwrap_or(0);
        LambdaSet::new(parts.into_iter().map(|p| {
            let pad = n0 - p.size();
            p.pad_ones(pad)
        }))
    }
}

impl fmt::Display for LambdaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.base.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
