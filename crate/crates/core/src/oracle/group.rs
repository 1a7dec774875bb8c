//! Permutations, stabilisers of set partitions, conjugacy classes of
//! subgroups and induction to `S_n`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::partitions::{Partition, SetPartition};
use crate::symfunc::{Basis, Rational, SymmetricFunction};

/// A permutation of `{0, ..., n-1}` given by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true))
        });
        Perm(images)
    }

    /// Transposition of two 0-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        if (self.n() - self.cycle_type().length()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, pi: &SetPartition) -> SetPartition {
        pi.permute(&self.images())
    }
}

/// All `n!` permutations in lexicographic order of images.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: usize,
    pub cycle_type: Partition,
}

/// A subgroup of `S_n` listed element by element, with its conjugacy classes.
#[derive(Clone, Debug)]
pub struct Subgroup {
    n: usize,
    elements: Vec<Perm>,
    classes: Vec<ConjugacyClass>,
    class_of: HashMap<Perm, usize>,
}

impl Subgroup {
    /// `elements` must be closed under composition.
    pub fn from_elements(n: usize, elements: Vec<Perm>) -> Self {
        let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let inverses: Vec<Perm> = elements.iter().map(Perm::inverse).collect();
        let mut class_id = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_id[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let g = &elements[start];
            let mut size = 0;
            for (x, x_inv) in elements.iter().zip(&inverses) {
                let conj = x.compose(g).compose(x_inv);
                let k = index[&conj];
                if class_id[k] == usize::MAX {
                    class_id[k] = id;
                    size += 1;
                }
            }
            classes.push(ConjugacyClass { representative: g.clone(), size, cycle_type: g.cycle_type() });
        }
        let class_of = elements.iter().cloned().zip(class_id).collect();
        Subgroup { n, elements, classes, class_of }
    }

    pub fn symmetric(n: usize) -> Self {
        Self::from_elements(n, all_perms(n))
    }

    /// `(S_n)_π`.
    pub fn stabilizer(pi: &SetPartition) -> Self {
        let n = pi.n();
        let elements = all_perms(n).into_iter().filter(|g| g.act(pi) == *pi).collect();
        Self::from_elements(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_index(&self, g: &Perm) -> Option<usize> {
        self.class_of.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.class_of.contains_key(g)
    }

    /// Frobenius characteristic of the induced representation `Ind_H^{S_n} χ`,
    /// where `values[c]` is `χ` on class `c`:
    /// `(1/|H|) Σ_{h ∈ H} χ(h) p_{type(h)}`, converted to the Schur basis.
    pub fn induced_characteristic(&self, values: &[Rational]) -> SymmetricFunction {
        assert_eq!(values.len(), self.classes.len());
        let order = Rational::from_integer(BigInt::from(self.order()));
        let terms = self.classes.iter().zip(values).map(|(c, v)| {
            let weight = Rational::from_integer(BigInt::from(c.size)) * v / &order;
            (c.cycle_type.clone(), weight)
        });
        SymmetricFunction::from_terms(Basis::Power, terms).to_schur()
    }

    /// The induced character on `S_n` evaluated at `g` by the classical sum
    /// `(1/|H|) Σ_{x ∈ S_n, x g x^{-1} ∈ H} χ(x g x^{-1})`.
    pub fn induced_value(&self, values: &[Rational], g: &Perm) -> Rational {
        let mut total = Rational::from_integer(BigInt::from(0));
        for x in all_perms(self.n) {
            let conj = x.compose(g).compose(&x.inverse());
            if let Some(c) = self.class_index(&conj) {
                total += &values[c];
            }
        }
        total / Rational::from_integer(BigInt::from(self.order()))
    }
}
