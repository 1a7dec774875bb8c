//! Brute-force ground truth for small `n`: intersection lattices `Π_Λ`,
//! equivariant homology of their intervals over the rationals, and the orbit
//! sum giving the cohomology of the arrangement complement. Also a monomial
//! expansion used to check products and plethysm independently.

mod arrangement;
mod group;
mod homology;
mod linalg;
mod monomial;
mod poset;

pub use arrangement::{
    default_oracle_limit, interval_homology, lattice_orbits, orbit_contribution, orientation_character, orientation_character_full,
    sw_betti_numbers, sw_complement_char, EquivariantCharacter, OrbitData, BETTI_ORACLE_LIMIT, DEFAULT_ORACLE_LIMIT,
};
pub use group::{all_perms, ConjugacyClass, Perm, Subgroup};
pub use homology::{ChainComplex, IntervalHomology};
pub use linalg::{determinant, kernel, rank, Echelon, SparseVec};
pub use monomial::{monomial_expand, monomial_restrict, plethysm_oracle, poly_mul, ssyt_contents, Polynomial};
pub use poset::{build_pi_lambda, Poset};
