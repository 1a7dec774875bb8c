//! Littlewood-Richardson tableaux: enumeration, coefficients, products, and the
//! first-row shift that relates `s_{(n,α)} s_λ` to `s_{(n-1,α)} s_λ`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A skew tableau of shape `outer / inner`; `rows[r]` lists the entries of
/// row `r` of the skew diagram from left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LRTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl LRTableau {
    /// Builds and validates a tableau.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = LRTableau { outer, inner, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Content: number of `1`s, `2`s, ...
    pub fn weight(&self) -> Partition {
        let mut counts: Vec<u32> = Vec::new();
        for &x in self.rows.iter().flatten() {
            let i = x as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// Entry at (row, column), both 0-based, if that cell is in the skew part.
    fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.inner.part(r);
        if c < start || c >= self.outer.part(r) {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - start)).copied()
    }

    /// Checks the semistandard, lattice and content conditions.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if !self.outer.contains(&self.inner) {
            return bad(format!("{} does not contain {}", self.outer, self.inner));
        }
        let rows = self.outer.length();
        if self.rows.len() > rows && self.rows[rows..].iter().any(|r| !r.is_empty()) {
            return bad("entries below the outer shape".into());
        }
        for r in 0..rows {
            let want = self.outer.part(r) - self.inner.part(r);
            let have = self.rows.get(r).map_or(0, Vec::len);
            if want != have {
                return bad(format!("row {r} has {have} entries, expected {want}"));
            }
        }
        let mut counts: Vec<usize> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            if row.iter().any(|&x| x == 0) {
                return bad("zero entry".into());
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {r} is not weakly increasing"));
            }
            if r > 0 {
                let start = self.inner.part(r);
                for (offset, &x) in row.iter().enumerate() {
                    if let Some(above) = self.entry(r - 1, start + offset) {
                        if above >= x {
                            return bad(format!("column {} is not strictly increasing", start + offset));
                        }
                    }
                }
            }
            // Reverse reading word: right to left along each row, rows top to bottom.
            for &x in row.iter().rev() {
                let i = x as usize - 1;
                if counts.len() <= i {
                    counts.resize(i + 1, 0);
                }
                counts[i] += 1;
                if i > 0 && counts[i] > counts[i - 1] {
                    return bad("reading word is not a lattice word".into());
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} {:?}", self.outer, self.inner, self.rows)
    }
}

/// Depth-first placement of the letters `1, 2, ...` of `weight` as horizontal
/// strips on top of `inner`, keeping the reading word a lattice word. `visit`
/// receives the final shape and the count of each letter in each row.
fn enumerate_fillings(
    inner: &Partition,
    weight: &Partition,
    outer: Option<&Partition>,
    visit: &mut dyn FnMut(&[u32], &[Vec<u32>]),
) {
    let max_rows = inner.length() + weight.length();
    let mut shape: Vec<u32> = (0..max_rows).map(|r| inner.part(r) as u32).collect();
    let mut counts: Vec<Vec<u32>> = vec![vec![0; max_rows]; weight.length()];
    let bound: Vec<u32> = match outer {
        Some(o) => (0..max_rows).map(|r| o.part(r) as u32).collect(),
        None => vec![u32::MAX; max_rows],
    };
    if let Some(o) = outer {
        if o.length() > max_rows || !o.contains(inner) {
            return;
        }
    }

    struct Ctx<'a> {
        weight: &'a [u32],
        bound: &'a [u32],
        visit: &'a mut dyn FnMut(&[u32], &[Vec<u32>]),
    }

    fn place_letter(ctx: &mut Ctx, letter: usize, shape: &mut Vec<u32>, counts: &mut Vec<Vec<u32>>) {
        if letter == ctx.weight.len() {
            (ctx.visit)(shape, counts);
            return;
        }
        let old = shape.clone();
        place_row(ctx, letter, 0, ctx.weight[letter], 0, &old, shape, counts);
    }

    #[allow(clippy::too_many_arguments)]
    fn place_row(
        ctx: &mut Ctx,
        letter: usize,
        row: usize,
        remaining: u32,
        placed_so_far: u32,
        old: &[u32],
        shape: &mut Vec<u32>,
        counts: &mut Vec<Vec<u32>>,
    ) {
        if remaining == 0 {
            place_letter(ctx, letter + 1, shape, counts);
            return;
        }
        if row == shape.len() {
            return;
        }
        let mut cap = remaining.min(ctx.bound[row].saturating_sub(shape[row]));
        if row > 0 {
            cap = cap.min(old[row - 1] - old[row]);
        }
        if letter > 0 {
            // cumulative count of `letter` through this row may not exceed the
            // count of `letter - 1` through the previous row
            let prev: u32 = if row == 0 { 0 } else { counts[letter - 1][..row].iter().sum() };
            cap = cap.min(prev.saturating_sub(placed_so_far));
            if prev < placed_so_far {
                return;
            }
        }
        for a in (0..=cap).rev() {
            shape[row] += a;
            counts[letter][row] = a;
            place_row(ctx, letter, row + 1, remaining - a, placed_so_far + a, old, shape, counts);
            shape[row] -= a;
            counts[letter][row] = 0;
        }
    }

    let mut ctx = Ctx { weight: weight.parts(), bound: &bound, visit };
    place_letter(&mut ctx, 0, &mut shape, &mut counts);
}

fn trim(shape: &[u32]) -> Partition {
    Partition::from_vec_unchecked(shape.iter().copied().take_while(|&x| x > 0).collect())
}

/// All LR tableaux of shape `outer / inner` with the given weight.
pub fn lr_tableaux(outer: &Partition, inner: &Partition, weight: &Partition) -> Vec<LRTableau> {
    if outer.size() != inner.size() + weight.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    enumerate_fillings(inner, weight, Some(outer), &mut |shape, counts| {
        if trim(shape) != *outer {
            return;
        }
        let rows = (0..outer.length())
            .map(|r| {
                let mut row = Vec::new();
                for (letter, c) in counts.iter().enumerate() {
                    row.extend(std::iter::repeat(letter as u32 + 1).take(c[r] as usize));
                }
                row
            })
            .collect();
        out.push(LRTableau { outer: outer.clone(), inner: inner.clone(), rows });
    });
    out
}

/// `c^ν_{λμ}`, the multiplicity of `s_ν` in `s_λ s_μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let left = lambda.size() + mu.size();
    if left != nu.size() {
        return Err(Error::SizeMismatch { left, right: nu.size() });
    }
    if !nu.contains(lambda) || !nu.contains(mu) {
        return Ok(0);
    }
    let mut count = 0u64;
    enumerate_fillings(lambda, mu, Some(nu), &mut |shape, _| {
        if trim(shape) == *nu {
            count += 1;
        }
    });
    Ok(count)
}

/// Schur expansion of `s_λ s_μ` as `ν -> c^ν_{λμ}`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    enumerate_fillings(lambda, mu, None, &mut |shape, _| {
        *out.entry(trim(shape)).or_insert(0) += 1;
    });
    out
}

/// Splits an inner shape `(n, α)` into `n` and `α`.
fn split_first_row(inner: &Partition) -> (usize, Partition) {
    let parts = inner.parts();
    match parts.split_first() {
        Some((&n, rest)) => (n as usize, Partition::from_vec_unchecked(rest.to_vec())),
        None => (0, Partition::empty()),
    }
}

/// Drops the first empty box of the first row and slides the rest of that row
/// one step left: `LR^{ν}_{(n,α),λ} -> LR^{ν'}_{(n-1,α),λ}`. Requires
/// `n > λ1 + α1`.
pub fn phi_shift(t: &LRTableau) -> Result<LRTableau> {
    let (n, alpha) = split_first_row(&t.inner);
    let weight = t.weight();
    let bound = weight.part(0) + alpha.part(0);
    if n <= bound {
        return Err(Error::PhiPrecondition { n, bound });
    }
    let mut inner = t.inner.parts().to_vec();
    let mut outer = t.outer.parts().to_vec();
    inner[0] -= 1;
    outer[0] -= 1;
    let mut rows = t.rows.clone();
    // a single-row shape can shrink to nothing
    if outer[0] == 0 {
        outer.clear();
        rows.clear();
    }
    let inner = Partition::from_unsorted(inner);
    let outer = Partition::new(outer).map_err(|e| Error::InvalidTableau(e.to_string()))?;
    LRTableau::new(outer, inner, rows)
}

/// Inverse of [`phi_shift`]: slide the first row right and put an empty box in the gap.
pub fn phi_unshift(t: &LRTableau) -> Result<LRTableau> {
    let mut inner = t.inner.parts().to_vec();
    if inner.is_empty() {
        inner.push(0);
    }
    inner[0] += 1;
    let mut outer = t.outer.parts().to_vec();
    let mut rows = t.rows.clone();
    if outer.is_empty() {
        outer.push(0);
        rows.push(Vec::new());
    }
    outer[0] += 1;
    LRTableau::new(Partition::from_unsorted(outer), Partition::from_unsorted(inner), rows)
}
