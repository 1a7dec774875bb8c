//! Sparse exact linear algebra over the rationals: a semi-echelon basis that
//! supports rank, membership and coordinates.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::symfunc::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

/// Rows with distinct leading columns, each normalised to a leading one.
/// Entries of a row sit at or to the right of its leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Reduces `v` against the stored rows. Returns the residue and the
    /// coefficient used for each row, so `v = residue + Σ c_r row_r`.
    pub fn reduce(&self, mut v: SparseVec) -> (SparseVec, Vec<(usize, Rational)>) {
        let mut used = Vec::new();
        let mut cursor = 0usize;
        loop {
            let hit = v
                .range(cursor..)
                .find(|(c, _)| self.pivot_row.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, coeff)) = hit else { break };
            let r = self.pivot_row[&col];
            axpy(&mut v, &-coeff.clone(), &self.rows[r]);
            used.push((r, coeff));
            cursor = col + 1;
        }
        (v, used)
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let (residue, _) = self.reduce(v);
        self.push_residue(residue)
    }

    /// Stores an already reduced vector as a new row.
    pub fn push_residue(&mut self, mut residue: SparseVec) -> bool {
        let Some((&lead, lead_val)) = residue.iter().next() else {
            return false;
        };
        if !lead_val.is_one() {
            let inv = lead_val.recip();
            for x in residue.values_mut() {
                *x *= &inv;
            }
        }
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(residue);
        true
    }
}

/// `v += a * w`, dropping cancelled entries.
pub fn axpy(v: &mut SparseVec, a: &Rational, w: &SparseVec) {
    for (c, x) in w {
        let add = a * x;
        match v.entry(*c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(add);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += add;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Rank of the span of `vectors`.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Null space of the linear map sending basis vector `a` to `images[a]`,
/// as vectors in the source coordinates.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    // Augment each image with an identity tag in columns past the image range.
    let offset = images.iter().filter_map(|v| v.keys().next_back()).max().map_or(0, |m| m + 1);
    let mut echelon = Echelon::new();
    let mut out = Vec::new();
    for (a, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.insert(offset + a, Rational::one());
        let (residue, _) = echelon.reduce(v);
        let image_part_zero = residue.keys().next().is_none_or(|&c| c >= offset);
        if image_part_zero {
            out.push(residue.into_iter().map(|(c, x)| (c - offset, x)).collect());
        } else {
            echelon.push_residue(residue);
        }
    }
    out
}

/// Determinant of a small dense matrix.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
