//! Intersection lattices of diagonal arrangements as subposets of `Π_n`.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::partitions::{set_partitions_of_types, Partition, SetPartition};

/// A finite poset of set partitions ordered by refinement, with bottom `0̂`.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    elements: Vec<SetPartition>,
    index: HashMap<SetPartition, usize>,
    bottom: usize,
}

impl Poset {
    pub fn from_elements(n: usize, mut elements: Vec<SetPartition>) -> Self {
        let bottom_elem = SetPartition::bottom(n);
        if !elements.contains(&bottom_elem) {
            elements.push(bottom_elem.clone());
        }
        // linear extension: fewer merges first
        elements.sort_by_key(|p| (n - p.block_count(), p.clone()));
        let index: HashMap<_, _> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let bottom = index[&bottom_elem];
        Poset { n, elements, index, bottom }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SetPartition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &SetPartition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].refines(&self.elements[b])
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Elements strictly between `0̂` and `top`, in the stored linear extension.
    pub fn open_interval(&self, top: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.bottom && self.less(x, top))
            .collect()
    }

    /// One element per `S_n`-orbit above `0̂`: set partitions of the same type
    /// form a single orbit.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let mut seen: HashSet<Partition> = HashSet::new();
        (0..self.len())
            .filter(|&i| i != self.bottom && seen.insert(self.elements[i].type_partition()))
            .collect()
    }

    /// Reflexive, antisymmetric and transitive on every triple.
    pub fn check_partial_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|a| self.leq(a, a))
            && (0..m).all(|a| (0..m).all(|b| !(self.leq(a, b) && self.leq(b, a)) || a == b))
            && (0..m).all(|a| {
                (0..m).all(|b| !self.leq(a, b) || (0..m).all(|c| !self.leq(b, c) || self.leq(a, c)))
            })
    }

    /// Closed under joins of elements above `0̂`.
    pub fn is_join_closed(&self) -> bool {
        let m = self.len();
        (0..m).filter(|&a| a != self.bottom).all(|a| {
            (0..m)
                .filter(|&b| b != self.bottom)
                .all(|b| self.index.contains_key(&self.elements[a].join(&self.elements[b])))
        })
    }
}

/// `Π_Λ`: the join-closure in `Π_n` of all set partitions whose type lies in
/// `types`, together with `0̂`.
pub fn build_pi_lambda(n: usize, types: &BTreeSet<Partition>, limit: usize) -> Result<Poset> {
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if let Some(bad) = types.iter().find(|t| t.size() != n) {
        return Err(Error::InvalidParams(format!("type {bad} is not a partition of {n}")));
    }
    let generators = set_partitions_of_types(n, types);
    let mut all: HashSet<SetPartition> = generators.iter().cloned().collect();
    let mut frontier: Vec<SetPartition> = generators.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &generators {
                let j = a.join(g);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    Ok(Poset::from_elements(n, all.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn two_equal_generates_everything() {
        let p = build_pi_lambda(4, &BTreeSet::from([part![2, 1, 1]]), 7).unwrap();
        assert_eq!(p.len(), 15);
        assert!(p.is_join_closed());
    }

    #[test]
    fn three_equal_in_four_points() {
        let p = build_pi_lambda(4, &BTreeSet::from([part![3, 1]]), 7).unwrap();
        // 0̂, the four 3-blocks, and 1̂ (any two distinct 3-blocks join to 1̂)
        assert_eq!(p.len(), 6);
        assert!(p.index_of(&SetPartition::top(4)).is_some());
        assert!(p.check_partial_order());
        assert!(p.is_join_closed());
    }

    #[test]
    fn pairs_of_pairs() {
        let p = build_pi_lambda(4, &BTreeSet::from([part![2, 2]]), 7).unwrap();
        assert_eq!(p.len(), 5);
        let twos = p.elements().iter().filter(|e| e.type_partition() == part![2, 2]).count();
        assert_eq!(twos, 3);
        let top = p.index_of(&SetPartition::top(4)).unwrap();
        assert_eq!(p.open_interval(top).len(), 3);
    }

    #[test]
    fn orders_are_partial_orders() {
        for n in 1..=5 {
            let types: BTreeSet<Partition> = [Partition::hook(2.min(n), n - 2.min(n))].into();
            let p = build_pi_lambda(n, &types, 7).unwrap();
            assert!(p.check_partial_order());
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert_eq!(
            build_pi_lambda(8, &BTreeSet::from([part![2, 1, 1, 1, 1, 1, 1]]), 7).unwrap_err(),
            Error::OracleLimit { n: 8, limit: 7 }
        );
    }
}
