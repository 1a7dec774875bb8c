//! Cohomology of arrangement complements from the lattice side: sphere
//! orientation characters and the orbit sum over `Π_Λ \ {0̂}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::group::{Perm, Subgroup};
use super::homology::IntervalHomology;
use super::linalg::determinant;
use super::poset::{build_pi_lambda, Poset};
use crate::error::{Error, Result};
use crate::partitions::{Partition, SetPartition};
use crate::symfunc::{rat, Basis, Rational, SymmetricFunction};

/// Default ceiling on `n` for equivariant runs; `REPSTAB_ORACLE_LIMIT`
/// overrides it.
pub const DEFAULT_ORACLE_LIMIT: usize = 6;
/// Ceiling for non-equivariant Betti-number checks.
pub const BETTI_ORACLE_LIMIT: usize = 7;

pub fn default_oracle_limit() -> usize {
    std::env::var("REPSTAB_ORACLE_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

/// Class function on a subgroup of `S_n`, one trace vector per homology
/// degree. Traces are listed in the order of `group.classes()`.
#[derive(Clone, Debug)]
pub struct EquivariantCharacter {
    pub group: Arc<Subgroup>,
    pub traces: BTreeMap<isize, Vec<Rational>>,
}

impl EquivariantCharacter {
    pub fn degree(&self, j: isize) -> Option<&[Rational]> {
        self.traces.get(&j).map(Vec::as_slice)
    }

    /// Trace of an arbitrary group element, looked up through its class.
    pub fn value(&self, j: isize, g: &Perm) -> Option<Rational> {
        let c = self.group.class_index(g)?;
        Some(self.traces.get(&j).map_or_else(Rational::zero, |t| t[c].clone()))
    }
}

/// Homology dimensions of `(0̂, π)` in every degree, with the action of
/// `(S_n)_π` on each nonzero group.
pub fn interval_homology(poset: &Poset, pi: usize) -> Result<(BTreeMap<isize, usize>, EquivariantCharacter)> {
    if pi == poset.bottom() {
        return Err(Error::InvalidParams("the interval top must lie above the bottom element".into()));
    }
    let hom = IntervalHomology::compute(poset, pi);
    let group = Arc::new(Subgroup::stabilizer(poset.element(pi)));
    let traces = hom
        .dims()
        .iter()
        .filter(|&(_, &dim)| dim > 0)
        .map(|(&j, _)| (j, hom.class_traces(poset, j, &group)))
        .collect();
    Ok((hom.dims().clone(), EquivariantCharacter { group, traces }))
}

/// Matrix of `g` on the complement of the block-constant vectors in `R^n`,
/// in the basis `e_b - e_{min B}` for each non-minimal `b` of each block `B`.
fn complement_matrix(pi: &SetPartition, g: &Perm) -> Vec<Vec<Rational>> {
    let blocks = pi.blocks();
    let mut coord: HashMap<usize, usize> = HashMap::new();
    for block in &blocks {
        for &b in &block[1..] {
            let next = coord.len();
            coord.insert(b, next);
        }
    }
    let dim = coord.len();
    let mut m = vec![vec![Rational::zero(); dim]; dim];
    // column of basis vector e_b - e_a is g·(e_b - e_a) = e_{gb} - e_{ga}
    let mut column = |col: usize, x: usize, sign: i64| {
        // e_x - e_y = (e_x - e_c) - (e_y - e_c) with c the minimum of their block
        if let Some(&row) = coord.get(&x) {
            m[row][col] += rat(sign);
        }
    };
    for block in &blocks {
        let a = block[0];
        for &b in &block[1..] {
            let col = coord[&b];
            column(col, g.image(b - 1) + 1, 1);
            column(col, g.image(a - 1) + 1, -1);
        }
    }
    m
}

/// Sign of `det(g)` on `π^⊥ ⊂ (R^d)^n`, the character of `(S_n)_π` on the top
/// homology of the sphere `S^{dn-1} ∩ π^⊥`.
pub fn orientation_character(pi: &SetPartition, d: usize, g: &Perm) -> Result<i64> {
    if g.n() != pi.n() || g.act(pi) != *pi {
        return Err(Error::NotStabilizing);
    }
    // π^⊥ = R^d ⊗ W, so the determinant is det(g|W)^d
    let det = determinant(complement_matrix(pi, g));
    let base = if det == rat(1) {
        1
    } else if det == rat(-1) {
        -1
    } else {
        unreachable!("a permutation matrix has determinant ±1");
    };
    Ok(if d % 2 == 0 { 1 } else { base })
}

/// The same character computed from the full `d·dim W` matrix `I_d ⊗ M`.
pub fn orientation_character_full(pi: &SetPartition, d: usize, g: &Perm) -> Result<i64> {
    if g.n() != pi.n() || g.act(pi) != *pi {
        return Err(Error::NotStabilizing);
    }
    let m = complement_matrix(pi, g);
    let w = m.len();
    let mut full = vec![vec![Rational::zero(); d * w]; d * w];
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            for s in 0..d {
                full[s * w + r][s * w + c] = x.clone();
            }
        }
    }
    let det = determinant(full);
    Ok(if det == rat(1) { 1 } else { -1 })
}

/// Lattice data independent of `d` and `i`: one entry per orbit of
/// `Π_Λ \ {0̂}`.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub representative: SetPartition,
    pub rank: usize,
    pub dims: BTreeMap<isize, usize>,
    pub character: EquivariantCharacter,
}

type CacheKey = (usize, BTreeSet<Partition>);

static LATTICE_CACHE: LazyLock<RwLock<HashMap<CacheKey, Arc<Vec<OrbitData>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Orbit data of `Π_Λ` for the given types, cached per `(n, types)`.
pub fn lattice_orbits(n: usize, types: &BTreeSet<Partition>, limit: usize) -> Result<Arc<Vec<OrbitData>>> {
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let key = (n, types.clone());
    if let Some(hit) = LATTICE_CACHE.read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let poset = build_pi_lambda(n, types, limit)?;
    let reps = poset.orbit_representatives();
    let orbits: Vec<OrbitData> = reps
        .par_iter()
        .map(|&pi| {
            let (dims, character) = interval_homology(&poset, pi).expect("representative above bottom");
            let representative = poset.element(pi).clone();
            let rank = representative.type_partition().rank();
            OrbitData { representative, rank, dims, character }
        })
        .collect();
    let orbits = Arc::new(orbits);
    LATTICE_CACHE.write().expect("cache lock").insert(key, orbits.clone());
    Ok(orbits)
}

/// `ch H̃^i` of the complement of the arrangement whose lattice is `Π_Λ`
/// (real codimension `d` per equation), by the orbit sum
/// `Σ_π Ind_{(S_n)_π}^{S_n} (H̃_{codim π - i - 2}(0̂, π) ⊗ H̃_{codim π - 1}(S_π))`.
pub fn sw_complement_char(
    n: usize,
    d: usize,
    types: &BTreeSet<Partition>,
    i: usize,
    limit: usize,
) -> Result<SymmetricFunction> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} must be at least 2")));
    }
    let orbits = lattice_orbits(n, types, limit)?;
    let mut total = SymmetricFunction::zero(Basis::Schur);
    for orbit in orbits.iter() {
        if let Some(f) = orbit_contribution(orbit, d, i) {
            total += &f;
        }
    }
    Ok(total)
}

/// `ch Ind_{(S_n)_π}^{S_n} (H̃_{codim π - i - 2}(0̂, π) ⊗ H̃_{codim π - 1}(S_π))`
/// for one orbit, or `None` when that homology group vanishes.
pub fn orbit_contribution(orbit: &OrbitData, d: usize, i: usize) -> Option<SymmetricFunction> {
    let j = (d * orbit.rank) as isize - i as isize - 2;
    let traces = orbit.character.degree(j)?;
    let group = &orbit.character.group;
    let values: Vec<Rational> = group
        .classes()
        .iter()
        .zip(traces)
        .map(|(c, t)| {
            let sign = orientation_character(&orbit.representative, d, &c.representative)
                .expect("class representatives stabilise the orbit representative");
            t * rat(sign)
        })
        .collect();
    Some(group.induced_characteristic(&values))
}

/// Reduced Betti numbers `dim H̃^i` of the complement for every `i`, without
/// group actions. Works up to [`BETTI_ORACLE_LIMIT`].
pub fn sw_betti_numbers(n: usize, d: usize, types: &BTreeSet<Partition>, limit: usize) -> Result<BTreeMap<usize, usize>> {
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let poset = build_pi_lambda(n, types, limit)?;
    let mut orbit_sizes: HashMap<Partition, usize> = HashMap::new();
    for (idx, e) in poset.elements().iter().enumerate() {
        if idx != poset.bottom() {
            *orbit_sizes.entry(e.type_partition()).or_default() += 1;
        }
    }
    let reps = poset.orbit_representatives();
    let contributions: Vec<Vec<(usize, usize)>> = reps
        .par_iter()
        .map(|&pi| {
            let hom = IntervalHomology::compute(&poset, pi);
            let ty = poset.element(pi).type_partition();
            let codim = (d * ty.rank()) as isize;
            hom.dims()
                .iter()
                .filter(|&(_, &dim)| dim > 0)
                .filter_map(|(&j, &dim)| {
                    let i = codim - j - 2;
                    (i >= 0).then(|| (i as usize, dim * orbit_sizes[&ty]))
                })
                .collect()
        })
        .collect();
    let mut out = BTreeMap::new();
    for (i, b) in contributions.into_iter().flatten() {
        *out.entry(i).or_default() += b;
    }
    Ok(out)
}
