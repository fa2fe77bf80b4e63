//! Signed and unsigned pattern containment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A pattern `p(1) ... p(k)` of nonzero integers whose absolute values are
/// a permutation of `{1..k}`. Unsigned patterns have all values positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPattern {
    values: Vec<i32>,
}

impl SignedPattern {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        let k = values.len();
        if k == 0 {
            return Err(Error::MalformedPattern("empty pattern".into()));
        }
        let mut seen = vec![false; k + 1];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > k || seen[a] {
                return Err(Error::MalformedPattern(format!(
                    "{values:?}: absolute values must be a permutation of 1..{k}"
                )));
            }
            seen[a] = true;
        }
        Ok(Self { values })
    }

    pub fn unsigned(p: &Permutation) -> Self {
        Self {
            values: p.entries().iter().map(|&e| e as i32).collect(),
        }
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl FromStr for SignedPattern {
    type Err = Error;

    /// `"3 2 -1"`, `"3,2,-1"`, or a bare digit string such as `"321"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::MalformedPattern(format!("cannot parse {s:?}"));
        let values = if s.contains(|c: char| c == ',' || c == '-' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        SignedPattern::new(values)
    }
}

impl fmt::Display for SignedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Whether the signed sequence `w` contains an occurrence of `p`.
///
/// An occurrence is a choice of positions `i_1 < ... < i_k` such that
/// `|w(i_1)| ... |w(i_k)|` is order-isomorphic to `|p|` and each `w(i_j)`
/// has the same sign as `p(j)`. The search extends partial occurrences
/// left to right and drops any prefix that already breaks the order.
pub fn contains(w: &[i32], p: &SignedPattern) -> bool {
    let mut chosen = Vec::with_capacity(p.len());
    extend(w, &p.values, 0, &mut chosen)
}

fn extend(w: &[i32], p: &[i32], start: usize, chosen: &mut Vec<i32>) -> bool {
    let j = chosen.len();
    if j == p.len() {
        return true;
    }
    // not enough positions left
    if w.len() - start < p.len() - j {
        return false;
    }
    for pos in start..w.len() {
        let v = w[pos];
        if (v > 0) != (p[j] > 0) {
            continue;
        }
        let fits = chosen.iter().zip(p).all(|(&c, &q)| {
            (c.unsigned_abs() < v.unsigned_abs()) == (q.unsigned_abs() < p[j].unsigned_abs())
        });
        if fits {
            chosen.push(v);
            if extend(w, p, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn as_signed(w: &Permutation) -> Vec<i32> {
    w.entries().iter().map(|&e| e as i32).collect()
}

/// Unsigned containment for permutations.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    contains(&as_signed(w), &SignedPattern::unsigned(p))
}

fn avoids_all(w: &Permutation, patterns: &[&[i32]]) -> bool {
    let seq = as_signed(w);
    patterns.iter().all(|&p| {
        let p = SignedPattern { values: p.to_vec() };
        !contains(&seq, &p)
    })
}

/// 321-avoiding.
pub fn is_fully_commutative(w: &Permutation) -> bool {
    avoids_all(w, &[&[3, 2, 1]])
}

/// 321- and 3412-avoiding.
pub fn is_boolean_element(w: &Permutation) -> bool {
    avoids_all(w, &[&[3, 2, 1], &[3, 4, 1, 2]])
}

/// 321-, 231- and 312-avoiding: a product of pairwise commuting generators.
pub fn is_free(w: &Permutation) -> bool {
    avoids_all(w, &[&[3, 2, 1], &[2, 3, 1], &[3, 1, 2]])
}
