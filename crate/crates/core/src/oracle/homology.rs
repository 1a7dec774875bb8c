//! Reduced homology of order complexes of open intervals `(0̂, π)`, with the
//! action of the stabiliser of `π` on each homology group.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::group::{Perm, Subgroup};
use super::linalg::{kernel, Echelon, SparseVec};
use super::poset::Poset;
use crate::symfunc::{rat, Rational};

/// Chains of the open interval by length; level `L` holds the chains with `L`
/// elements, i.e. the simplices of dimension `L - 1`. Level 0 is the empty
/// chain, which makes the complex augmented (reduced).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    vertices: Vec<usize>,
    levels: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl ChainComplex {
    /// Order complex of `(0̂, top)` in `poset`.
    pub fn open_interval(poset: &Poset, top: usize) -> Self {
        let vertices = poset.open_interval(top);
        // `above[i]`: interval elements strictly greater than vertices[i]
        let above: Vec<Vec<usize>> = vertices
            .iter()
            .map(|&a| vertices.iter().copied().filter(|&b| poset.less(a, b)).collect())
            .collect();
        let position: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        let mut current: Vec<Vec<usize>> = vertices.iter().map(|&v| vec![v]).collect();
        while !current.is_empty() {
            let mut next = Vec::new();
            for chain in &current {
                let last = *chain.last().expect("nonempty chain");
                for &b in &above[position[&last]] {
                    let mut c = chain.clone();
                    c.push(b);
                    next.push(c);
                }
            }
            levels.push(current);
            current = next;
        }
        let index = levels
            .iter()
            .map(|lvl| lvl.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        ChainComplex { vertices, levels, index }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Highest simplex dimension present (`-1` for the empty complex).
    pub fn top_dimension(&self) -> isize {
        self.levels.len() as isize - 2
    }

    /// Number of `j`-simplices; one `(-1)`-simplex.
    pub fn count(&self, j: isize) -> usize {
        usize::try_from(j + 1).ok().and_then(|l| self.levels.get(l)).map_or(0, Vec::len)
    }

    /// `∂_j` applied to each `j`-simplex, in `(j-1)`-simplex coordinates.
    pub fn boundary_images(&self, j: isize) -> Vec<SparseVec> {
        let Some(level) = usize::try_from(j + 1).ok().filter(|&l| l >= 1 && l < self.levels.len()) else {
            return Vec::new();
        };
        self.levels[level]
            .iter()
            .map(|chain| {
                let mut v = SparseVec::new();
                for drop in 0..chain.len() {
                    let face: Vec<usize> =
                        chain.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &x)| x).collect();
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    let at = self.index[level - 1][&face];
                    let entry = v.entry(at).or_insert_with(Rational::zero);
                    *entry += rat(sign);
                    if entry.is_zero() {
                        v.remove(&at);
                    }
                }
                v
            })
            .collect()
    }

    /// Index of the image of `j`-simplex `a` under `map` on vertices.
    fn permute_simplex(&self, j: isize, a: usize, map: &HashMap<usize, usize>) -> usize {
        let level = (j + 1) as usize;
        let image: Vec<usize> = self.levels[level][a].iter().map(|v| map[v]).collect();
        self.index[level][&image]
    }

    /// Number of `j`-simplices fixed by a vertex map.
    pub fn fixed_count(&self, j: isize, map: &HashMap<usize, usize>) -> usize {
        (0..self.count(j)).filter(|&a| self.permute_simplex(j, a, map) == a).count()
    }
}

/// Homology of one degree: boundaries in semi-echelon form and a basis of a
/// complement of the boundaries inside the cycles.
#[derive(Clone, Debug)]
struct DegreeBasis {
    boundaries: Echelon,
    classes: Echelon,
}

/// Reduced homology of `Δ((0̂, π))` in all degrees, equivariant for `(S_n)_π`.
#[derive(Clone, Debug)]
pub struct IntervalHomology {
    complex: ChainComplex,
    dims: BTreeMap<isize, usize>,
    bases: BTreeMap<isize, DegreeBasis>,
}

impl IntervalHomology {
    pub fn compute(poset: &Poset, top: usize) -> Self {
        let complex = ChainComplex::open_interval(poset, top);
        let top_dim = complex.top_dimension();
        // rank ∂_j for j = 0..=top_dim (∂_0 maps vertices onto the empty chain)
        let mut ranks: HashMap<isize, usize> = HashMap::new();
        let mut echelons: HashMap<isize, Echelon> = HashMap::new();
        for j in 0..=top_dim {
            let mut e = Echelon::new();
            for v in complex.boundary_images(j) {
                e.insert(v);
            }
            ranks.insert(j, e.rank());
            echelons.insert(j, e);
        }
        let mut dims = BTreeMap::new();
        let mut bases = BTreeMap::new();
        for j in -1..=top_dim {
            let rank_out = ranks.get(&j).copied().unwrap_or(0);
            let rank_in = ranks.get(&(j + 1)).copied().unwrap_or(0);
            let dim = complex.count(j) - rank_out - rank_in;
            dims.insert(j, dim);
            if dim == 0 {
                continue;
            }
            let boundaries = echelons.remove(&(j + 1)).unwrap_or_default();
            let cycles: Vec<SparseVec> = if j == -1 {
                // ∂_{-1} = 0: the empty chain is a cycle
                vec![SparseVec::from([(0, Rational::one())])]
            } else {
                kernel(&complex.boundary_images(j))
            };
            let mut classes = Echelon::new();
            for z in cycles {
                let (residue, _) = boundaries.reduce(z);
                classes.insert(residue);
            }
            debug_assert_eq!(classes.rank(), dim);
            bases.insert(j, DegreeBasis { boundaries, classes });
        }
        IntervalHomology { complex, dims, bases }
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    /// `dim H̃_j` for `j >= -1` up to the top simplex dimension.
    pub fn dims(&self) -> &BTreeMap<isize, usize> {
        &self.dims
    }

    pub fn dim(&self, j: isize) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    /// Trace of `g` on `H̃_j`. `g` must stabilise the top of the interval.
    pub fn trace(&self, poset: &Poset, j: isize, g: &Perm) -> Rational {
        let Some(basis) = self.bases.get(&j) else {
            return Rational::zero();
        };
        let map = vertex_map(poset, &self.complex, g);
        let mut trace = Rational::zero();
        for (a, h) in basis.classes.rows().iter().enumerate() {
            let moved: SparseVec = h
                .iter()
                .map(|(&simplex, x)| (self.complex.permute_simplex(j, simplex, &map), x.clone()))
                .collect();
            let (reduced, _) = basis.boundaries.reduce(moved);
            let (rest, coords) = basis.classes.reduce(reduced);
            debug_assert!(rest.is_empty(), "image of a cycle left the cycle space");
            if let Some((_, c)) = coords.iter().find(|(row, _)| *row == a) {
                trace += c;
            }
        }
        trace
    }

    /// Traces of each class representative of `group` on `H̃_j`.
    pub fn class_traces(&self, poset: &Poset, j: isize, group: &Subgroup) -> Vec<Rational> {
        group.classes().iter().map(|c| self.trace(poset, j, &c.representative)).collect()
    }

    /// `Σ_j (-1)^j tr(g | C_j)`, summed from `j = -1`.
    pub fn chain_lefschetz(&self, poset: &Poset, g: &Perm) -> Rational {
        let map = vertex_map(poset, &self.complex, g);
        let mut total = Rational::zero();
        for j in -1..=self.complex.top_dimension() {
            let fixed = rat(self.complex.fixed_count(j, &map) as i64);
            if j.rem_euclid(2) == 0 {
                total += fixed;
            } else {
                total -= fixed;
            }
        }
        total
    }

    /// `Σ_j (-1)^j tr(g | H̃_j)`.
    pub fn homology_lefschetz(&self, poset: &Poset, g: &Perm) -> Rational {
        let mut total = Rational::zero();
        for &j in self.dims.keys() {
            let t = self.trace(poset, j, g);
            if j.rem_euclid(2) == 0 {
                total += t;
            } else {
                total -= t;
            }
        }
        total
    }
}

fn vertex_map(poset: &Poset, complex: &ChainComplex, g: &Perm) -> HashMap<usize, usize> {
    complex
        .vertices()
        .iter()
        .map(|&v| {
            let image = g.act(poset.element(v));
            let idx = poset.index_of(&image).expect("poset is S_n-stable");
            (v, idx)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::oracle::linalg::axpy;
    use crate::oracle::poset::build_pi_lambda;
    use crate::partitions::{Partition, SetPartition};

    fn full_lattice(n: usize) -> Poset {
        build_pi_lambda(n, &BTreeSet::from([Partition::hook(2, n - 2)]), 7).unwrap()
    }

    #[test]
    fn pi2_is_the_empty_complex() {
        let p = full_lattice(2);
        let top = p.index_of(&SetPartition::top(2)).unwrap();
        let h = IntervalHomology::compute(&p, top);
        assert_eq!(h.dim(-1), 1);
        let s2 = Subgroup::stabilizer(&SetPartition::top(2));
        assert_eq!(h.class_traces(&p, -1, &s2), vec![rat(1), rat(1)]);
    }

    #[test]
    fn pi3_carries_the_standard_representation() {
        let p = full_lattice(3);
        let top = p.index_of(&SetPartition::top(3)).unwrap();
        let h = IntervalHomology::compute(&p, top);
        assert_eq!(h.dims().values().copied().collect::<Vec<_>>(), vec![0, 2]);
        let id = Perm::identity(3);
        let swap = Perm::transposition(3, 0, 1);
        let cycle = Perm::from_images(vec![1, 2, 0]);
        assert_eq!(h.trace(&p, 0, &id), rat(2));
        assert_eq!(h.trace(&p, 0, &swap), rat(0));
        assert_eq!(h.trace(&p, 0, &cycle), rat(-1));
    }

    #[test]
    fn pi4_top_homology_has_dimension_six() {
        let p = full_lattice(4);
        let top = p.index_of(&SetPartition::top(4)).unwrap();
        let h = IntervalHomology::compute(&p, top);
        assert_eq!(h.dim(1), 6);
        assert_eq!(h.dim(0), 0);
        assert_eq!(h.dim(-1), 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for n in 3..=5 {
            let p = full_lattice(n);
            let top = p.index_of(&SetPartition::top(n)).unwrap();
            let c = ChainComplex::open_interval(&p, top);
            for j in 1..=c.top_dimension() {
                let outer = c.boundary_images(j);
                let inner = c.boundary_images(j - 1);
                for v in outer {
                    let mut acc = SparseVec::new();
                    for (face, coeff) in &v {
                        axpy(&mut acc, coeff, &inner[*face]);
                    }
                    assert!(acc.is_empty());
                }
            }
        }
    }
}
