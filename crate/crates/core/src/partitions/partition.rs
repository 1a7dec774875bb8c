use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// The empty partition is the unique partition of zero. Equality and ordering
/// are structural (lexicographic on the parts).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n as u32])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(a, 1^b)` with `a >= 1`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        assert!(arm >= 1, "hook needs a first row");
        let mut parts = vec![arm as u32];
        parts.extend(std::iter::repeat(1).take(leg));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).map_or(0, |&p| p as usize)
    }

    /// `|λ| - l(λ)`.
    pub fn rank(&self) -> usize {
        self.size() - self.length()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p as usize == i).count()
    }

    /// `(1^{m_1}, 2^{m_2}, ...)` as a vector indexed by part size; index 0 unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `λ + □`: the first part incremented.
    pub fn add_box(&self) -> Self {
        let mut parts = self.0.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition(parts)
    }

    /// Inverse of [`Partition::add_box`] when `λ1 > λ2`.
    pub fn remove_box(&self) -> Option<Self> {
        if self.part(0) > self.part(1) {
            let mut parts = self.0.clone();
            parts[0] -= 1;
            if parts[0] == 0 {
                parts.pop();
            }
            Some(Partition(parts))
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Containment of Ferrers diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Pads with `extra` parts equal to one.
    pub fn pad_ones(&self, extra: usize) -> Self {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat(1).take(extra));
        Partition(parts)
    }

    /// Drops all parts equal to one.
    pub fn without_ones(&self) -> Self {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    /// Multiset union of parts, sorted.
    pub fn union(&self, other: &Partition) -> Self {
        let mut out = Vec::with_capacity(self.length() + other.length());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Partition(out)
    }

    /// Every part multiplied by `m`.
    pub fn scale(&self, m: u32) -> Self {
        Partition(self.0.iter().map(|&p| p * m).collect())
    }

    /// `(n, α1, α2, ...)`; requires `n >= α1`.
    pub fn prepend_row(n: usize, alpha: &Partition) -> Result<Self> {
        if n < alpha.part(0) {
            return Err(Error::InvalidPartition(format!("({n},{alpha}) is not decreasing")));
        }
        let mut parts = Vec::with_capacity(alpha.length() + 1);
        if n > 0 {
            parts.push(n as u32);
        }
        parts.extend_from_slice(&alpha.0);
        Ok(Partition(parts))
    }
}

/// Iterator over the partitions of `n` in lexicographically decreasing order.
pub struct PartitionsOf {
    current: Option<Vec<u32>>,
    max_part: u32,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: decrement the rightmost part > 1, then refill greedily.
        if let Some(pos) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..pos].to_vec();
            let v = cur[pos] - 1;
            let mut rest = 1 + cur[pos + 1..].iter().sum::<u32>();
            next.push(v);
            while rest > 0 {
                let take = rest.min(v);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition(cur))
    }
}

/// All partitions of `n` with parts at most `max_part` (unbounded if `None`),
/// lexicographically decreasing.
pub fn partitions_of(n: usize, max_part: Option<usize>) -> PartitionsOf {
    let max_part = max_part.unwrap_or(n).min(n) as u32;
    let current = if n == 0 {
        Some(Vec::new())
    } else if max_part == 0 {
        None
    } else {
        let mut first = Vec::new();
        let mut rest = n as u32;
        while rest > 0 {
            let take = rest.min(max_part);
            first.push(take);
            rest -= take;
        }
        Some(first)
    };
    PartitionsOf { current, max_part }
}

impl PartitionsOf {
    pub fn max_part(&self) -> usize {
        self.max_part as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[3,1,1]`, `[2,1^4]` or `[]`. Parts may be given in any order.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        let mut parts = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {item:?} in {s:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {item:?} in {s:?}")))?;
            if base == 0 {
                return Err(Error::InvalidPartition(format!("{s} has a zero part")));
            }
            parts.extend(std::iter::repeat(base).take(exp));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout the tests: `part![3, 1, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}
