//! Text and JSON forms.
//!
//! Human form: `3*s[4,1] + s[3,2] - 1/2*s[1,1]`, terms ordered by decreasing
//! degree then lexicographically decreasing; power sums print as `p[...]`;
//! zero prints as `0`. JSON form: an object mapping partition text to a
//! rational string, always in the Schur basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, Rational, SymmetricFunction};
use crate::error::{Error, Result};
use crate::partitions::Partition;

impl SymmetricFunction {
    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut terms: Vec<_> = self.terms().iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
        terms
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = match self.basis() {
            Basis::Schur => 's',
            Basis::Power => 'p',
        };
        for (i, (key, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = coeff.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{letter}{key}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
}

/// Parses the human form. All terms must use the same letter.
impl FromStr for SymmetricFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SymmetricFunction::zero(Basis::Schur));
        }
        // split into signed chunks outside brackets
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut depth = 0;
        let mut negative = false;
        let mut current = String::new();
        for ch in s.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    current.push(ch);
                }
                ']' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.trim().is_empty() {
                        chunks.push((negative, std::mem::take(&mut current)));
                    } else if !chunks.is_empty() || !current.trim().is_empty() {
                        return Err(Error::Parse(format!("dangling sign in {s:?}")));
                    }
                    current.clear();
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.trim().is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        chunks.push((negative, current));

        let mut basis = None;
        let mut out: Option<SymmetricFunction> = None;
        for (neg, chunk) in chunks {
            let chunk = chunk.trim();
            let (coeff, term) = match chunk.split_once('*') {
                Some((c, t)) => (parse_rational(c)?, t.trim()),
                None => (Rational::one(), chunk),
            };
            let (b, rest) = if let Some(r) = term.strip_prefix('s') {
                (Basis::Schur, r)
            } else if let Some(r) = term.strip_prefix('p') {
                (Basis::Power, r)
            } else {
                return Err(Error::Parse(format!("term {term:?} must start with s or p")));
            };
            if basis.is_some_and(|x| x != b) {
                return Err(Error::Parse("mixed bases".into()));
            }
            basis = Some(b);
            let key: Partition = rest.parse()?;
            let f = out.get_or_insert_with(|| SymmetricFunction::zero(b));
            f.add_term(key, if neg { -coeff } else { coeff });
        }
        Ok(out.expect("at least one term"))
    }
}

impl Serialize for SymmetricFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let schur = self.to_schur();
        let map: BTreeMap<String, String> = schur
            .sorted_terms()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymmetricFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut f = SymmetricFunction::zero(Basis::Schur);
        for (k, v) in map {
            let key: Partition = k.parse().map_err(D::Error::custom)?;
            let coeff = parse_rational(&v).map_err(D::Error::custom)?;
            f.add_term(key, coeff);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::symfunc::rat;

    #[test]
    fn display_examples() {
        let f = SymmetricFunction::from_terms(
            Basis::Schur,
            [(part![4, 1], rat(3)), (part![3, 2], rat(1)), (part![1, 1], Rational::new(1.into(), 2.into()))],
        );
        assert_eq!(f.to_string(), "3*s[4,1] + s[3,2] + 1/2*s[1,1]");
        assert_eq!((-&f).to_string(), "-3*s[4,1] - s[3,2] - 1/2*s[1,1]");
        assert_eq!(SymmetricFunction::zero(Basis::Schur).to_string(), "0");
        assert_eq!(SymmetricFunction::p(part![2, 1]).to_string(), "p[2,1]");
        assert_eq!(SymmetricFunction::one(Basis::Schur).to_string(), "s[]");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["3*s[4,1] + s[3,2]", "-s[2] + 2/3*s[1,1]", "0", "p[2,1] - 1/2*p[1,1,1]", "s[]"] {
            let f: SymmetricFunction = text.parse().unwrap();
            let again: SymmetricFunction = f.to_string().parse().unwrap();
            assert_eq!(f, again, "{text}");
        }
        assert_eq!("s[2,1^2]".parse::<SymmetricFunction>().unwrap(), SymmetricFunction::schur(part![2, 1, 1]));
        assert!("s[2] + p[1,1]".parse::<SymmetricFunction>().is_err());
        assert!("x[2]".parse::<SymmetricFunction>().is_err());
        assert!("s[2] +".parse::<SymmetricFunction>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let f: SymmetricFunction = "3*s[4,1] - 1/2*s[3,2]".parse().unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"[3,2]":"-1/2","[4,1]":"3"}"#);
        let back: SymmetricFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
