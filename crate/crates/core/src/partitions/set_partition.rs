use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::Partition;

/// A set partition of `{1, ..., n}`.
///
/// Stored as a restricted growth string: `labels[i]` is the block index of
/// element `i + 1`, blocks numbered in order of their smallest element. This
/// is a canonical form, so structural equality is equality of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

impl SetPartition {
    /// Builds from blocks of 1-based elements.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![u8::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidSetPartition(format!("element {x} outside 1..={n}")));
                }
                if raw[x - 1] != u8::MAX {
                    return Err(Error::InvalidSetPartition(format!("element {x} appears twice")));
                }
                raw[x - 1] = b as u8;
            }
        }
        if let Some(missing) = raw.iter().position(|&l| l == u8::MAX) {
            return Err(Error::InvalidSetPartition(format!("element {} not covered", missing + 1)));
        }
        Ok(Self::from_labels(&raw))
    }

    /// Canonicalises arbitrary block labels.
    pub fn from_labels(raw: &[u8]) -> Self {
        let mut remap = [u8::MAX; 256];
        let mut next = 0u8;
        let labels = raw
            .iter()
            .map(|&l| {
                if remap[l as usize] == u8::MAX {
                    remap[l as usize] = next;
                    next += 1;
                }
                remap[l as usize]
            })
            .collect();
        SetPartition { labels }
    }

    /// `0̂ = {1}|{2}|...|{n}`.
    pub fn bottom(n: usize) -> Self {
        SetPartition { labels: (0..n as u8).collect() }
    }

    /// `1̂ = {1,...,n}`.
    pub fn top(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as sorted lists of 1-based elements, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    /// Block sizes sorted decreasingly.
    pub fn type_partition(&self) -> Partition {
        let mut sizes = vec![0u32; self.block_count()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        Partition::from_unsorted(sizes)
    }

    /// `self` is finer than (or equal to) `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        debug_assert_eq!(self.n(), other.n());
        let mut image = vec![u8::MAX; self.block_count()];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return false;
            }
        }
        true
    }

    /// Finest common coarsening; corresponds to intersecting the subspaces.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for labels in [&self.labels, &other.labels] {
            let mut first = [usize::MAX; 256];
            for (i, &l) in labels.iter().enumerate() {
                if first[l as usize] == usize::MAX {
                    first[l as usize] = i;
                } else {
                    let (a, b) = (find(&mut parent, first[l as usize]), find(&mut parent, i));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let raw: Vec<u8> = (0..n).map(|i| find(&mut parent, i) as u8).collect();
        Self::from_labels(&raw)
    }

    /// Image under a permutation given as 0-based images: element `i` goes to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> SetPartition {
        let mut raw = vec![0u8; self.n()];
        for (i, &l) in self.labels.iter().enumerate() {
            raw[perm[i]] = l;
        }
        Self::from_labels(&raw)
    }
}

/// All set partitions of `{1..n}` in restricted-growth-string order.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(labels: &mut Vec<u8>, max: u8, n: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition { labels: labels.clone() });
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            rec(labels, max.max(l), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// All set partitions of `{1..n}` whose type is one of `types`.
pub fn set_partitions_of_types(n: usize, types: &BTreeSet<Partition>) -> Vec<SetPartition> {
    set_partitions(n)
        .into_iter()
        .filter(|p| types.contains(&p.type_partition()))
        .collect()
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn type_examples() {
        let a = SetPartition::from_blocks(3, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(a.type_partition(), part![2, 1]);
        assert_eq!(SetPartition::bottom(3).type_partition(), part![1, 1, 1]);
        let b = SetPartition::from_blocks(5, &[vec![1, 3, 5], vec![2, 4]]).unwrap();
        assert_eq!(b.type_partition(), part![3, 2]);
        assert_eq!(b.to_string(), "{1,3,5}|{2,4}");
    }

    #[test]
    fn rejects_malformed_blocks() {
        assert!(SetPartition::from_blocks(3, &[vec![1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![1, 2], vec![]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![1, 4]]).is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), b);
        }
    }

    #[test]
    fn every_set_partition_type_is_consistent() {
        for n in 1..=6 {
            for p in set_partitions(n) {
                let t = p.type_partition();
                assert_eq!(t.size(), n);
                assert_eq!(t.rank(), n - p.block_count());
                assert_eq!(SetPartition::from_blocks(n, &p.blocks()).unwrap(), p);
            }
        }
    }

    #[test]
    fn join_and_refinement() {
        let a = SetPartition::from_blocks(4, &[vec![1, 2], vec![3], vec![4]]).unwrap();
        let b = SetPartition::from_blocks(4, &[vec![1], vec![2, 3], vec![4]]).unwrap();
        let j = a.join(&b);
        assert_eq!(j, SetPartition::from_blocks(4, &[vec![1, 2, 3], vec![4]]).unwrap());
        assert!(a.refines(&j) && b.refines(&j));
        assert!(!j.refines(&a));
        assert!(SetPartition::bottom(4).refines(&a));
        assert!(a.refines(&SetPartition::top(4)));
    }

    #[test]
    fn permute_moves_elements() {
        let a = SetPartition::from_blocks(3, &[vec![1, 2], vec![3]]).unwrap();
        // 1 -> 3, 2 -> 2, 3 -> 1
        let p = a.permute(&[2, 1, 0]);
        assert_eq!(p, SetPartition::from_blocks(3, &[vec![3, 2], vec![1]]).unwrap());
    }
}
