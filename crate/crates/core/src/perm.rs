//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Products compose right to left, so `(uv)(j) = u(v(j))`, and the simple
//! generator `σ_i` acts on the right by swapping the entries in positions
//! `i` and `i + 1`. All public indices are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported degree. Generator sets are stored as `u64` masks.
pub const MAX_DEGREE: usize = 64;

/// An element of the symmetric group `S_n`.
///
/// Equality, hashing and ordering include the degree: `12` and `123` are
/// different values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Box<[u8]>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `w(1) ... w(n)`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = [false; MAX_DEGREE + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::NotAPermutation(entries));
            }
            seen[e] = true;
        }
        Ok(Self {
            entries: entries.into_iter().map(|e| e as u8).collect(),
        })
    }

    pub(crate) fn from_raw(entries: Box<[u8]>) -> Self {
        debug_assert!(!entries.is_empty());
        Self { entries }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        Ok(Self {
            entries: (1..=n as u8).collect(),
        })
    }

    /// The simple transposition `σ_i` of `S_n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::identity(n)?.right_action(i)
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        Ok(Self {
            entries: (1..=n as u8).rev().collect(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// One-line notation as raw bytes (values are 1-based).
    #[inline]
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// `w(i)` for `1 <= i <= n`.
    ///
    /// # Panics
    /// If `i` is out of range.
    #[inline]
    pub fn value(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e as usize == i + 1)
    }

    /// The product `self · other`, i.e. apply `other` first.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Self {
            entries: other
                .entries
                .iter()
                .map(|&j| self.entries[j as usize - 1])
                .collect(),
        })
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.degree() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                degree: self.degree(),
            });
        }
        Ok(())
    }

    /// `w σ_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn right_action(&self, i: usize) -> Result<Permutation> {
        self.check_generator(i)?;
        Ok(self.right_action_unchecked(i))
    }

    /// `σ_i w`: swaps the values `i` and `i + 1`.
    pub fn left_action(&self, i: usize) -> Result<Permutation> {
        self.check_generator(i)?;
        Ok(self.left_action_unchecked(i))
    }

    #[inline]
    pub(crate) fn right_action_unchecked(&self, i: usize) -> Permutation {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Self { entries }
    }

    #[inline]
    pub(crate) fn left_action_unchecked(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Self {
            entries: self
                .entries
                .iter()
                .map(|&e| match e {
                    e if e == a => b,
                    e if e == b => a,
                    e => e,
                })
                .collect(),
        }
    }

    /// Swaps the entries at 1-based positions `i` and `j`, i.e. `w · (i j)`.
    pub(crate) fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, j - 1);
        Self { entries }
    }

    pub fn inverse(&self) -> Permutation {
        let mut entries = vec![0u8; self.degree()].into_boxed_slice();
        for (pos, &val) in self.entries.iter().enumerate() {
            entries[val as usize - 1] = pos as u8 + 1;
        }
        Self { entries }
    }

    /// Coxeter length, computed as the number of inversions.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Indices `i` with `w(i) > w(i + 1)`, in increasing order.
    pub fn right_descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Indices `i` such that `i + 1` appears to the left of `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.degree() && self.entries[i - 1] > self.entries[i]
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        if i == 0 || i >= self.degree() {
            return false;
        }
        let pos = |v: u8| self.entries.iter().position(|&e| e == v).unwrap();
        pos(i as u8 + 1) < pos(i as u8)
    }

    /// Every permutation of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Result<AllPermutations> {
        Ok(AllPermutations {
            next: Some(Self::identity(n)?.entries.into_vec()),
        })
    }
}

/// Lexicographic enumeration of `S_n`; see [`Permutation::all`].
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&i| succ[i] < succ[i + 1])
        {
            let j = (i + 1..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i])
                .unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::from_raw(current.into_boxed_slice()))
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for &e in self.entries.iter() {
                write!(f, "{e}")?;
            }
        } else {
            for (i, &e) in self.entries.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"2143"`, only for `n <= 9`) or a comma/space
    /// separated list (`"2,1,4,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParsePermutation(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let entries: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
