//! Exact symmetric functions in the Schur and power-sum bases.
//!
//! A [`SymmetricFunction`] is a finitely supported map from partitions to
//! exact rationals together with a basis tag. Functions may be inhomogeneous;
//! the infinite series used by the k-equal formulas are always truncated at a
//! caller-supplied degree before they reach this type.

mod characters;
mod lr;
mod plethysm;
mod series;
mod text;

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use characters::{character, power_sum_in_schur, ribbons_addable, ribbons_removable, z_coefficient};
pub use lr::{lr_coeff, lr_product, lr_tableaux, phi_shift, phi_unshift, LRTableau};
pub use plethysm::{adams, plethysm, plethysm_truncated};
pub use series::{lie, lie_series, pi, pi_signed_series, u_series};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Power,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricFunction {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl SymmetricFunction {
    pub fn zero(basis: Basis) -> Self {
        SymmetricFunction { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Partition::empty(), Rational::one())
    }

    pub fn monomial(basis: Basis, key: Partition, coeff: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(key, coeff);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(basis: Basis, terms: I) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    /// `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        Self::monomial(Basis::Schur, lambda, Rational::one())
    }

    /// `h_n = s_(n)`.
    pub fn h(n: usize) -> Self {
        Self::schur(Partition::row(n))
    }

    /// `e_n = s_(1^n)`.
    pub fn e(n: usize) -> Self {
        Self::schur(Partition::column(n))
    }

    /// `p_μ`.
    pub fn p(mu: Partition) -> Self {
        Self::monomial(Basis::Power, mu, Rational::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rational> {
        self.terms
    }

    pub fn coefficient(&self, key: &Partition) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymmetricFunction {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Sorted distinct degrees present.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// The common degree of all terms; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        match self.degrees().as_slice() {
            [] => Ok(None),
            [d] => Ok(Some(*d)),
            many => Err(Error::NotHomogeneous(many.to_vec())),
        }
    }

    /// Terms of degree exactly `t`.
    pub fn homogeneous_part(&self, t: usize) -> Self {
        self.filter_terms(|k| k.size() == t)
    }

    /// Terms of degree at most `t`.
    pub fn truncate(&self, t: usize) -> Self {
        self.filter_terms(|k| k.size() <= t)
    }

    fn filter_terms(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        SymmetricFunction {
            basis: self.basis,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn in_basis(&self, basis: Basis) -> Self {
        match (self.basis, basis) {
            (Basis::Schur, Basis::Power) => self.to_power(),
            (Basis::Power, Basis::Schur) => self.to_schur(),
            _ => self.clone(),
        }
    }

    /// Power-sum expansion, `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
    pub fn to_power(&self) -> Self {
        if self.basis == Basis::Power {
            return self.clone();
        }
        let pieces: Vec<Vec<(Partition, Rational)>> = self
            .terms
            .par_iter()
            .map(|(lambda, c)| {
                crate::partitions::partitions_of(lambda.size(), None)
                    .filter_map(|mu| {
                        let chi = character(lambda, &mu);
                        if chi.is_zero() {
                            None
                        } else {
                            let coeff = c * Rational::new(chi, z_coefficient(&mu));
                            Some((mu, coeff))
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_terms(Basis::Power, pieces.into_iter().flatten())
    }

    /// Schur expansion via Murnaghan-Nakayama ribbon addition.
    pub fn to_schur(&self) -> Self {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let pieces: Vec<BTreeMap<Partition, Rational>> = self
            .terms
            .par_iter()
            .map(|(mu, c)| {
                let expansion = power_sum_in_schur(mu);
                expansion
                    .iter()
                    .map(|(lambda, chi)| (lambda.clone(), c * Rational::from_integer(chi.clone())))
                    .collect()
            })
            .collect();
        Self::from_terms(Basis::Schur, pieces.into_iter().flatten())
    }

    /// The involution `ω`: conjugation in the Schur basis, `p_μ -> (-1)^{|μ|-l(μ)} p_μ`.
    pub fn omega(&self) -> Self {
        let terms = self.terms.iter().map(|(k, v)| match self.basis {
            Basis::Schur => (k.conjugate(), v.clone()),
            Basis::Power => (k.clone(), if k.rank() % 2 == 1 { -v } else { v.clone() }),
        });
        Self::from_terms(self.basis, terms)
    }

    /// `ω` applied `times` times.
    pub fn omega_pow(&self, times: usize) -> Self {
        if times % 2 == 1 {
            self.omega()
        } else {
            self.clone()
        }
    }

    /// Product in the basis of `self` (the other factor is converted if needed).
    pub fn mul(&self, other: &Self) -> Self {
        let other = other.in_basis(self.basis);
        match self.basis {
            Basis::Power => self.mul_power(&other, None),
            Basis::Schur => self.mul_schur(&other),
        }
    }

    /// Power-basis product dropping every term of degree above `max_degree`.
    pub(crate) fn mul_power(&self, other: &Self, max_degree: Option<usize>) -> Self {
        debug_assert!(self.basis == Basis::Power && other.basis == Basis::Power);
        let mut out = Self::zero(Basis::Power);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if max_degree.is_some_and(|m| a.size() + b.size() > m) {
                    continue;
                }
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    fn mul_schur(&self, other: &Self) -> Self {
        let pairs: Vec<(&Partition, &Rational, &Partition, &Rational)> = self
            .terms
            .iter()
            .flat_map(|(a, ca)| other.terms.iter().map(move |(b, cb)| (a, ca, b, cb)))
            .collect();
        let pieces: Vec<Vec<(Partition, Rational)>> = pairs
            .par_iter()
            .map(|&(a, ca, b, cb)| {
                let c = ca * cb;
                // Enumerate with the smaller shape as the tableau weight.
                let (outer, weight) = if a.size() >= b.size() { (a, b) } else { (b, a) };
                lr_product(outer, weight)
                    .into_iter()
                    .map(|(nu, m)| (nu, &c * Rational::from_integer(BigInt::from(m))))
                    .collect()
            })
            .collect();
        Self::from_terms(Basis::Schur, pieces.into_iter().flatten())
    }

    /// Product computed through the power-sum basis and converted back to `self`'s basis.
    pub fn mul_via_power(&self, other: &Self) -> Self {
        let product = self.to_power().mul_power(&other.to_power(), None);
        product.in_basis(self.basis)
    }

    /// `V + □` on the Schur expansion of a homogeneous function.
    pub fn add_box(&self) -> Result<Self> {
        if self.basis != Basis::Schur {
            return self.to_schur().add_box();
        }
        self.homogeneous_degree()?;
        Ok(SymmetricFunction {
            basis: Basis::Schur,
            terms: self.terms.iter().map(|(k, v)| (k.add_box(), v.clone())).collect(),
        })
    }

    /// Every Schur coefficient is a nonnegative integer.
    pub fn is_schur_positive_integral(&self) -> bool {
        self.in_basis(Basis::Schur)
            .terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Every coefficient in the current basis is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }
}

impl Add for &SymmetricFunction {
    type Output = SymmetricFunction;

    fn add(self, rhs: &SymmetricFunction) -> SymmetricFunction {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymmetricFunction {
    type Output = SymmetricFunction;

    fn add(mut self, rhs: SymmetricFunction) -> SymmetricFunction {
        self += &rhs;
        self
    }
}

impl AddAssign<&SymmetricFunction> for SymmetricFunction {
    fn add_assign(&mut self, rhs: &SymmetricFunction) {
        let rhs = rhs.in_basis(self.basis);
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
    }
}

impl Neg for &SymmetricFunction {
    type Output = SymmetricFunction;

    fn neg(self) -> SymmetricFunction {
        self.scale(&-Rational::one())
    }
}

impl Neg for SymmetricFunction {
    type Output = SymmetricFunction;

    fn neg(self) -> SymmetricFunction {
        -&self
    }
}

impl Sub for &SymmetricFunction {
    type Output = SymmetricFunction;

    fn sub(self, rhs: &SymmetricFunction) -> SymmetricFunction {
        self + &(-rhs)
    }
}

impl Sub for SymmetricFunction {
    type Output = SymmetricFunction;

    fn sub(self, rhs: SymmetricFunction) -> SymmetricFunction {
        &self - &rhs
    }
}

impl Mul for &SymmetricFunction {
    type Output = SymmetricFunction;

    fn mul(self, rhs: &SymmetricFunction) -> SymmetricFunction {
        SymmetricFunction::mul(self, rhs)
    }
}

impl Mul for SymmetricFunction {
    type Output = SymmetricFunction;

    fn mul(self, rhs: SymmetricFunction) -> SymmetricFunction {
        SymmetricFunction::mul(&self, &rhs)
    }
}
