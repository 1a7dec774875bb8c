//! Exact computations for the `S_n`-equivariant cohomology of complements of
//! diagonal subspace arrangements and its representation stability.
//!
//! - [`partitions`]: integer partitions, set partitions, base sets `Λ`.
//! - [`symfunc`]: symmetric functions over the rationals (Schur and power-sum
//!   bases), Littlewood-Richardson products, plethysm.
//! - [`stability`]: the k-equal cohomology characteristics, the stabilization
//!   predicate, stability bounds and certified sharp bounds.
//! - [`oracle`]: brute-force equivariant poset homology for small `n`.

pub mod error;
pub mod oracle;
pub mod partitions;
pub mod stability;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::{LambdaSet, Partition, SetPartition};
pub use symfunc::{Basis, Rational, SymmetricFunction};
