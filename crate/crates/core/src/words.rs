//! Words in the simple generators and reduced decompositions.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on `ℓ(w)` for [`reduced_words`].
pub const DEFAULT_LENGTH_CAP: usize = 20;

/// A sequence of generator indices `σ_{a_1} σ_{a_2} ... σ_{a_m}` in `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    degree: usize,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(degree: usize, letters: Vec<usize>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > crate::perm::MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a >= degree) {
            return Err(Error::GeneratorOutOfRange { index: bad, degree });
        }
        Ok(Self {
            degree,
            letters: letters.into_iter().map(|a| a as u8).collect(),
        })
    }

    pub(crate) fn from_raw(degree: usize, letters: Vec<u8>) -> Self {
        Self { degree, letters }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product of the generators, composed right to left.
    pub fn evaluate(&self) -> Permutation {
        let mut entries: Vec<u8> = (1..=self.degree as u8).collect();
        for &a in &self.letters {
            entries.swap(a as usize - 1, a as usize);
        }
        Permutation::from_raw(entries.into_boxed_slice())
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    /// The set of letters used.
    pub fn letter_set(&self) -> GeneratorSet {
        GeneratorSet::from_letters(self.letters.iter().map(|&a| a as usize))
    }

    /// True when no letter occurs twice.
    pub fn has_distinct_letters(&self) -> bool {
        self.letter_set().len() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self} in S{})", self.degree)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Word {
    /// Parses the bracketed form `"[1,2,1]"` in the given degree.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        let bad = || Error::ParseWord(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let letters = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Word::new(degree, letters)
    }
}

/// A set of generator indices `{i : 1 <= i < n}`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(u64);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn from_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        GeneratorSet(letters.into_iter().fold(0, |m, a| m | (1u64 << a)))
    }

    pub fn from_mask(mask: u64) -> Self {
        GeneratorSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        GeneratorSet(self.0 | (1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 & other.0)
    }

    pub fn union(self, other: GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1 << i) != 0)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// `R(w)` sorted lexicographically, refusing `ℓ(w) > DEFAULT_LENGTH_CAP`.
pub fn reduced_words(w: &Permutation) -> Result<Vec<Word>> {
    reduced_words_capped(w, DEFAULT_LENGTH_CAP)
}

pub fn reduced_words_capped(w: &Permutation, cap: usize) -> Result<Vec<Word>> {
    let length = w.length();
    if length > cap {
        return Err(Error::LengthCap { length, cap });
    }
    let mut memo = HashMap::new();
    let words = suffix_words(w, &mut memo);
    let mut out: Vec<Word> = words
        .iter()
        .map(|letters| Word::from_raw(w.degree(), letters.clone()))
        .collect();
    out.sort();
    Ok(out)
}

// R(w) = ⋃_{i ∈ D_R(w)} R(wσ_i)·σ_i
fn suffix_words(
    w: &Permutation,
    memo: &mut HashMap<Permutation, Rc<Vec<Vec<u8>>>>,
) -> Rc<Vec<Vec<u8>>> {
    if let Some(hit) = memo.get(w) {
        return Rc::clone(hit);
    }
    let result = if w.is_identity() {
        vec![Vec::new()]
    } else {
        let mut acc = Vec::new();
        for i in w.right_descents() {
            let shorter = w.right_action_unchecked(i);
            for prefix in suffix_words(&shorter, memo).iter() {
                let mut word = Vec::with_capacity(prefix.len() + 1);
                word.extend_from_slice(prefix);
                word.push(i as u8);
                acc.push(word);
            }
        }
        acc
    };
    let result = Rc::new(result);
    memo.insert(w.clone(), Rc::clone(&result));
    result
}

/// The number of reduced words, without materialising them.
pub fn count_reduced_words(w: &Permutation) -> u128 {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let c = w
            .right_descents()
            .into_iter()
            .map(|i| go(&w.right_action_unchecked(i), memo))
            .sum();
        memo.insert(w.clone(), c);
        c
    }
    go(w, &mut HashMap::new())
}

/// The lexicographically smallest reduced word of `w`.
///
/// Built left to right: a reduced word of `w` may start with `i` exactly
/// when `i` is a left descent, so taking the smallest one each time is
/// optimal.
pub fn canonical_word(w: &Permutation) -> Word {
    let mut letters = Vec::with_capacity(w.length());
    let mut u = w.clone();
    while let Some(i) = (1..u.degree()).find(|&i| u.has_left_descent(i)) {
        letters.push(i as u8);
        u = u.left_action_unchecked(i);
    }
    Word::from_raw(w.degree(), letters)
}

/// All words reachable from a reduced word by commutation and braid moves.
pub fn move_closure(word: &Word) -> Result<BTreeSet<Word>> {
    if !word.is_reduced() {
        return Err(Error::NotReduced(word.to_string()));
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.letters.clone());
    queue.push_back(word.letters.clone());
    while let Some(current) = queue.pop_front() {
        for next in single_moves(&current) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|letters| Word::from_raw(word.degree, letters))
        .collect())
}

fn single_moves(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for p in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[p], letters[p + 1]);
        if a.abs_diff(b) > 1 {
            let mut next = letters.to_vec();
            next.swap(p, p + 1);
            out.push(next);
        }
        if p + 2 < letters.len() && a.abs_diff(b) == 1 && letters[p + 2] == a {
            let mut next = letters.to_vec();
            next[p] = b;
            next[p + 1] = a;
            next[p + 2] = b;
            out.push(next);
        }
    }
    out
}

/// Generators occurring in the reduced words of `w`.
pub fn support(w: &Permutation) -> GeneratorSet {
    canonical_word(w).letter_set()
}

/// Whether `w` has a reduced word with no repeated letter.
pub fn is_product_of_distinct_generators(w: &Permutation) -> bool {
    w.length() == support(w).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(n: usize, letters: &[usize]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    fn strs(words: &[Word]) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(word(4, &[1, 2, 3]).evaluate(), p("2341"));
        assert_eq!(word(4, &[]).evaluate(), p("1234"));
        assert_eq!(word(4, &[2, 1, 3, 2]).evaluate(), p("3412"));
    }

    #[test]
    fn is_reduced_examples() {
        assert!(!word(3, &[1, 1]).is_reduced());
        assert!(word(4, &[1, 3]).is_reduced());
        assert!(!word(3, &[2, 1, 2, 1]).is_reduced());
    }

    #[test]
    fn word_rejects_out_of_range_letters() {
        assert!(Word::new(3, vec![3]).is_err());
        assert!(Word::new(3, vec![0]).is_err());
    }

    #[test]
    fn reduced_words_examples() {
        assert_eq!(
            strs(&reduced_words(&p("2143")).unwrap()),
            ["[1,3]", "[3,1]"]
        );
        assert_eq!(strs(&reduced_words(&p("2341")).unwrap()), ["[1,2,3]"]);
        assert_eq!(
            strs(&reduced_words(&p("321")).unwrap()),
            ["[1,2,1]", "[2,1,2]"]
        );
        assert_eq!(strs(&reduced_words(&p("1234")).unwrap()), ["[]"]);
    }

    #[test]
    fn reduced_words_respects_cap() {
        let w0 = Permutation::longest(4).unwrap();
        assert_eq!(
            reduced_words_capped(&w0, 5),
            Err(Error::LengthCap { length: 6, cap: 5 })
        );
        assert_eq!(reduced_words(&w0).unwrap().len(), 16);
        assert_eq!(count_reduced_words(&w0), 16);
    }

    #[test]
    fn move_closure_examples() {
        let c = move_closure(&word(4, &[1, 3])).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&word(4, &[3, 1])));
        let c = move_closure(&word(3, &[1, 2, 1])).unwrap();
        assert_eq!(
            strs(&c.into_iter().collect::<Vec<_>>()),
            ["[1,2,1]", "[2,1,2]"]
        );
        let c = move_closure(&word(4, &[1, 2, 3])).unwrap();
        assert_eq!(c.len(), 1);
        assert!(matches!(
            move_closure(&word(3, &[1, 1])),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&p("2143")), GeneratorSet::from_letters([1, 3]));
        assert!(support(&p("1234")).is_empty());
        assert_eq!(support(&p("3214")), GeneratorSet::from_letters([1, 2]));
    }

    #[test]
    fn distinct_generator_examples() {
        assert!(is_product_of_distinct_generators(&p("2341")));
        assert!(!is_product_of_distinct_generators(&p("3214")));
        assert!(is_product_of_distinct_generators(&p("1234")));
    }

    #[test]
    fn canonical_word_is_lexicographic_minimum() {
        for n in 1..=5 {
            for w in Permutation::all(n).unwrap() {
                let all = reduced_words(&w).unwrap();
                assert_eq!(canonical_word(&w), all[0], "w = {w}");
            }
        }
        assert_eq!(canonical_word(&p("3412")).to_string(), "[2,1,3,2]");
        assert_eq!(canonical_word(&p("3214")).to_string(), "[1,2,1]");
    }

    #[test]
    fn support_agrees_with_every_reduced_word() {
        for w in Permutation::all(5).unwrap() {
            let s = support(&w);
            for r in reduced_words(&w).unwrap() {
                assert_eq!(r.letter_set(), s);
            }
            // σ_i is in the support iff w does not fix {1..i} setwise
            for i in 1..5 {
                let escapes = (1..=i).any(|j| w.value(j) > i);
                assert_eq!(s.contains(i), escapes);
            }
        }
    }

    #[test]
    fn word_parse_round_trip() {
        let w = word(5, &[2, 1, 3, 2]);
        assert_eq!(Word::parse(5, &w.to_string()).unwrap(), w);
        assert_eq!(Word::parse(5, "[]").unwrap(), word(5, &[]));
        assert!(Word::parse(5, "1,2").is_err());
    }
}
