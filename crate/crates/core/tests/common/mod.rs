//! Slow, definition-level reimplementations used as oracles.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use permlattice::words::{reduced_words, Word};
use permlattice::{FinitePoset, Permutation};

pub fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn fixture(name: &str) -> FinitePoset<String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    FinitePoset::parse_cover_list(&text).unwrap()
}

/// Every word of length `ℓ(w)` over `1..n` that multiplies out to `w`.
pub fn brute_reduced_words(w: &Permutation) -> Vec<Vec<u8>> {
    let n = w.degree();
    let len = w.length();
    let mut out = Vec::new();
    let mut word = vec![1u8; len];
    loop {
        let mut u = Permutation::identity(n).unwrap();
        for &a in &word {
            u = u.right_action(a as usize).unwrap();
        }
        if &u == w {
            out.push(word.clone());
        }
        // odometer over {1..n-1}^len
        let mut i = 0;
        loop {
            if i == len {
                out.sort();
                return out;
            }
            if (word[i] as usize) < n - 1 {
                word[i] += 1;
                break;
            }
            word[i] = 1;
            i += 1;
        }
    }
}

/// Bruhat order by the subword property on one reduced word of `w`.
pub fn subword_bruhat_leq(v: &Permutation, w: &Permutation) -> bool {
    let word = permlattice::canonical_word(w);
    let letters = word.letters();
    let target = v.length();
    (0u32..1 << letters.len()).any(|mask| {
        if mask.count_ones() as usize != target {
            return false;
        }
        let chosen: Vec<usize> = (0..letters.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| letters[i] as usize)
            .collect();
        Word::new(v.degree(), chosen).unwrap().evaluate() == *v
    })
}

/// Right weak order by prefixes of reduced words.
pub fn prefix_weak_leq(v: &Permutation, w: &Permutation) -> bool {
    let target = v.length();
    if target > w.length() {
        return false;
    }
    reduced_words(w).unwrap().iter().any(|word| {
        let prefix = word.letters()[..target]
            .iter()
            .map(|&a| a as usize)
            .collect();
        Word::new(v.degree(), prefix).unwrap().evaluate() == *v
    })
}

pub struct Flags {
    pub lattice: bool,
    pub modular: bool,
    pub distributive: bool,
    pub boolean: bool,
}

impl Flags {
    pub fn array(&self) -> [bool; 4] {
        [self.lattice, self.modular, self.distributive, self.boolean]
    }
}

/// Classification from first principles, using only `leq`:
/// * lattice: every pair has a least common upper bound and a greatest
///   common lower bound;
/// * modular: graded with `r(x) + r(y) = r(x ∨ y) + r(x ∧ y)`;
/// * distributive: the number of down-sets of join-irreducibles equals
///   the size of the lattice;
/// * boolean: distributive with pairwise incomparable join-irreducibles.
pub fn brute_flags<L>(poset: &FinitePoset<L>) -> Flags {
    let m = poset.len();
    let none = Flags {
        lattice: false,
        modular: false,
        distributive: false,
        boolean: false,
    };
    let leq = |a: usize, b: usize| poset.leq(a, b);
    let lub = |a: usize, b: usize| -> Option<usize> {
        let ups: Vec<usize> = (0..m).filter(|&z| leq(a, z) && leq(b, z)).collect();
        ups.iter()
            .copied()
            .find(|&z| ups.iter().all(|&u| leq(z, u)))
    };
    let glb = |a: usize, b: usize| -> Option<usize> {
        let downs: Vec<usize> = (0..m).filter(|&z| leq(z, a) && leq(z, b)).collect();
        downs
            .iter()
            .copied()
            .find(|&z| downs.iter().all(|&d| leq(d, z)))
    };
    let mut join = vec![vec![0; m]; m];
    let mut meet = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            match (lub(a, b), glb(a, b)) {
                (Some(j), Some(mt)) => {
                    join[a][b] = j;
                    meet[a][b] = mt;
                }
                _ => return none,
            }
        }
    }
    let is_cover = |y: usize, x: usize| -> bool {
        y != x && leq(y, x) && !(0..m).any(|z| z != x && z != y && leq(y, z) && leq(z, x))
    };
    // longest chain from the bottom; indices are a linear extension
    let mut rank = vec![0usize; m];
    for x in 0..m {
        for y in 0..x {
            if is_cover(y, x) {
                rank[x] = rank[x].max(rank[y] + 1);
            }
        }
    }
    let graded = (0..m).all(|x| (0..m).all(|y| !is_cover(y, x) || rank[x] == rank[y] + 1));
    let modular = graded
        && (0..m).all(|a| (0..m).all(|b| rank[a] + rank[b] == rank[join[a][b]] + rank[meet[a][b]]));
    if !modular {
        return Flags {
            lattice: true,
            ..none
        };
    }

    // join-irreducible: exactly one lower cover
    let lower_covers = |x: usize| -> usize { (0..m).filter(|&y| is_cover(y, x)).count() };
    let irreducibles: Vec<usize> = (0..m).filter(|&x| lower_covers(x) == 1).collect();
    let j = irreducibles.len();
    assert!(j < 20, "oracle is exponential in join-irreducibles");
    let downsets = (0u32..1 << j)
        .filter(|&mask| {
            (0..j).all(|a| {
                mask & (1 << a) == 0
                    || (0..j)
                        .all(|b| !leq(irreducibles[b], irreducibles[a]) || mask & (1 << b) != 0)
            })
        })
        .count();
    let distributive = downsets == m;
    let antichain = irreducibles
        .iter()
        .all(|&a| irreducibles.iter().all(|&b| a == b || !leq(a, b)));
    Flags {
        lattice: true,
        modular: true,
        distributive,
        boolean: distributive && antichain,
    }
}

/// `[σ_k, w]` is boolean iff some reduced word reads `x σ_k y` with `x`,
/// `y` products of distinct generators sharing only `σ_{k±1}`.
pub fn enumerated_atom_boolean(k: usize, w: &Permutation) -> bool {
    reduced_words(w).unwrap().iter().any(|word| {
        let l = word.letters();
        (0..l.len()).any(|i| {
            l[i] as usize == k && {
                let (x, y) = (&l[..i], &l[i + 1..]);
                distinct(x)
                    && distinct(y)
                    && !x.contains(&(k as u8))
                    && !y.contains(&(k as u8))
                    && x.iter()
                        .all(|a| !y.contains(a) || (*a as usize).abs_diff(k) == 1)
            }
        })
    })
}

/// `[σ_k, w]` is a lattice iff it is boolean or some reduced word reads
/// `x σ_k σ_{k-1} σ_{k+1} σ_k y` with `x`, `y` disjoint products of
/// distinct generators avoiding `σ_k, σ_{k±1}`.
pub fn enumerated_atom_lattice(k: usize, w: &Permutation) -> bool {
    if enumerated_atom_boolean(k, w) {
        return true;
    }
    if k < 2 {
        return false;
    }
    let block = [k as u8, (k - 1) as u8, (k + 1) as u8, k as u8];
    reduced_words(w).unwrap().iter().any(|word| {
        let l = word.letters();
        (0..l.len().saturating_sub(3)).any(|i| {
            l[i..i + 4] == block && {
                let (x, y) = (&l[..i], &l[i + 4..]);
                let forbidden = |a: &u8| (*a as usize).abs_diff(k) <= 1;
                distinct(x)
                    && distinct(y)
                    && !x.iter().any(forbidden)
                    && !y.iter().any(forbidden)
                    && x.iter().all(|a| !y.contains(a))
            }
        })
    })
}

fn distinct(letters: &[u8]) -> bool {
    letters.iter().collect::<HashSet<_>>().len() == letters.len()
}

/// Fixed-seed sample of `count` elements of `S_n`.
pub fn sample_permutations(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v: Vec<usize> = (1..=n).collect();
            v.shuffle(&mut rng);
            Permutation::new(v).unwrap()
        })
        .collect()
}
