use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{check_dk, is_stable_step, kequal_char, theorem_bounds, warm_cache};
use crate::error::Result;
use crate::symfunc::SymmetricFunction;

/// Outcome of the sharp-bound search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpBound {
    /// Smallest `m` with `V_n = V_{n-1} + □` for every `n > m`, proven by
    /// computation up to the theorem horizon.
    Certified(usize),
    /// As above, but only checked up to a horizon below the theorem bound.
    Candidate(usize),
    /// The sequence is identically zero over the computed range.
    Vacuous,
}

impl SharpBound {
    pub fn value(&self) -> Option<usize> {
        match self {
            SharpBound::Certified(m) | SharpBound::Candidate(m) => Some(*m),
            SharpBound::Vacuous => None,
        }
    }
}

impl std::fmt::Display for SharpBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SharpBound::Certified(m) => write!(f, "{m}"),
            SharpBound::Candidate(m) => write!(f, "{m}?"),
            SharpBound::Vacuous => f.write_str("vacuous"),
        }
    }
}

impl Serialize for SharpBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.value() {
            Some(m) => s.serialize_u64(m as u64),
            None => s.serialize_str("vacuous"),
        }
    }
}

/// Characteristics of one sequence over a range of `n`, the per-step
/// stability flags and the sharp bound they imply.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub i: usize,
    pub horizon: usize,
    /// `floor` of the smallest applicable theorem bound, when one is known.
    pub theorem_horizon: Option<usize>,
    pub certified: bool,
    pub chars: BTreeMap<usize, SymmetricFunction>,
    /// `stable_steps[n]` is `V_n = V_{n-1} + □`, for consecutive computed `n`.
    pub stable_steps: BTreeMap<usize, bool>,
    pub sharp_bound: SharpBound,
}

impl StabilityReport {
    /// Builds the flags and the bound from characteristics at consecutive
    /// `n`. `proven_beyond` says stability past the last `n` is known.
    pub fn from_chars(
        d: usize,
        i: usize,
        chars: BTreeMap<usize, SymmetricFunction>,
        proven_beyond: bool,
    ) -> Result<Self> {
        let mut stable_steps = BTreeMap::new();
        for ((_, prev), (&n, cur)) in chars.iter().zip(chars.iter().skip(1)) {
            stable_steps.insert(n, is_stable_step(cur, prev)?);
        }
        let first = chars.keys().next().copied().unwrap_or(0);
        let horizon = chars.keys().next_back().copied().unwrap_or(0);
        let sharp_bound = if chars.values().all(SymmetricFunction::is_zero) {
            SharpBound::Vacuous
        } else {
            let mut m = horizon;
            while m > first && stable_steps[&m] {
                m -= 1;
            }
            if proven_beyond {
                SharpBound::Certified(m)
            } else {
                SharpBound::Candidate(m)
            }
        };
        Ok(StabilityReport {
            d,
            k: None,
            lambda: None,
            i,
            horizon,
            theorem_horizon: None,
            certified: proven_beyond,
            chars,
            stable_steps,
            sharp_bound,
        })
    }
}

/// `floor` of the smallest theorem bound for the k-equal sequence.
pub fn theorem_horizon(d: usize, k: usize, i: usize) -> Result<usize> {
    let bounds = theorem_bounds(d, k, i)?;
    let min = bounds.into_iter().min().expect("at least one bound");
    Ok(min.floor().to_integer().to_usize().expect("nonnegative bound"))
}

/// Sharp bound for `H̃^i` of the `k`-equal complement in `(R^d)^n`, computed
/// for `k <= n <= H` with `H` the theorem horizon, beyond which stability is
/// known.
pub fn sharp_bound_certified(d: usize, k: usize, i: usize) -> Result<StabilityReport> {
    sharp_bound_with_horizon(d, k, i, None)
}

/// As [`sharp_bound_certified`], with an optional horizon override. A horizon
/// below the theorem horizon yields an uncertified candidate.
pub fn sharp_bound_with_horizon(d: usize, k: usize, i: usize, horizon: Option<usize>) -> Result<StabilityReport> {
    check_dk(d, k)?;
    let theory = theorem_horizon(d, k, i)?;
    let horizon = horizon.unwrap_or(theory).max(k);
    warm_cache(d, k, horizon);
    let chars: Vec<(usize, SymmetricFunction)> = (k..=horizon)
        .into_par_iter()
        .map(|n| kequal_char(n, i, d, k).map(|c| (n, c)))
        .collect::<Result<_>>()?;
    let mut report = StabilityReport::from_chars(d, i, chars.into_iter().collect(), horizon >= theory)?;
    report.k = Some(k);
    report.theorem_horizon = Some(theory);
    Ok(report)
}
