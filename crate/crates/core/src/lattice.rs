//! Finite posets and the lattice hierarchy
//! boolean ⊂ distributive ⊂ modular ⊂ lattice.
//!
//! A [`FinitePoset`] keeps its elements in a linear extension (every element
//! has a larger index than anything below it), its cover relation in both
//! directions, and the up-set and down-set of every element as bit rows.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt::{self, Display};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct FinitePoset<L> {
    labels: Vec<L>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl<L> FinitePoset<L> {
    /// Builds the poset generated by the strict relations `a < b`, given as
    /// index pairs into `labels`. The relations need not be covers; the
    /// cover relation is recovered by transitive reduction. Elements are
    /// reordered into a linear extension, preserving the input order
    /// wherever it is already compatible.
    pub fn from_relations(labels: Vec<L>, relations: &[(usize, usize)]) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::Poset("a poset needs at least one element".into()));
        }
        let mut succ = vec![Vec::new(); m];
        let mut indegree = vec![0usize; m];
        for &(a, b) in relations {
            if a >= m || b >= m {
                return Err(Error::Poset(format!("relation ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Poset(format!("element {a} is related to itself")));
            }
            succ[a].push(b);
            indegree[b] += 1;
        }

        // Kahn's algorithm, smallest index first.
        let mut order = Vec::with_capacity(m);
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..m).filter(|&i| indegree[i] == 0).map(Reverse).collect();
        while let Some(Reverse(i)) = ready.pop() {
            order.push(i);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(Reverse(j));
                }
            }
        }
        if order.len() != m {
            return Err(Error::Poset("the relations contain a cycle".into()));
        }

        let mut position = vec![0; m];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut new_succ = vec![Vec::new(); m];
        for (a, targets) in succ.iter().enumerate() {
            new_succ[position[a]].extend(targets.iter().map(|&b| position[b]));
        }
        let mut slots: Vec<Option<L>> = labels.into_iter().map(Some).collect();
        let labels: Vec<L> = order
            .iter()
            .map(|&old| slots[old].take().unwrap())
            .collect();

        let mut up = vec![FixedBitSet::with_capacity(m); m];
        for x in (0..m).rev() {
            let mut row = FixedBitSet::with_capacity(m);
            row.insert(x);
            for &y in &new_succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }

        let mut upper = vec![Vec::new(); m];
        let mut lower = vec![Vec::new(); m];
        for x in 0..m {
            let mut strict = up[x].clone();
            strict.set(x, false);
            for y in strict.ones() {
                // y covers x iff nothing strictly above x lies strictly below y
                let mut between = down[y].clone();
                between.intersect_with(&strict);
                if between.count_ones(..) == 1 {
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }

        Ok(Self {
            labels,
            upper,
            lower,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; posets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// `{y : i <= y}`
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// `{y : y <= i}`
    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Cover pairs `(lower, upper)` sorted by index.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .upper
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn minimum(&self) -> Option<usize> {
        // In a linear extension a minimum, if any, sits at index 0.
        (self.up[0].count_ones(..) == self.len()).then_some(0)
    }

    pub fn maximum(&self) -> Option<usize> {
        let last = self.len() - 1;
        (self.down[last].count_ones(..) == self.len()).then_some(last)
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum().is_some() && self.maximum().is_some()
    }

    /// Elements covering the minimum; empty when there is no minimum.
    pub fn atoms(&self) -> Vec<usize> {
        self.minimum()
            .map(|m| self.upper[m].clone())
            .unwrap_or_default()
    }

    /// Rank of every element when the poset has a minimum and all maximal
    /// chains through each element from the minimum have equal length.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        self.minimum()?;
        let mut height = vec![0usize; self.len()];
        for x in 0..self.len() {
            for &y in &self.upper[x] {
                height[y] = height[y].max(height[x] + 1);
            }
        }
        let graded = self
            .cover_edges()
            .iter()
            .all(|&(x, y)| height[y] == height[x] + 1);
        graded.then_some(height)
    }

    /// Length of the poset when it is bounded and graded.
    pub fn rank(&self) -> Option<usize> {
        let max = self.maximum()?;
        self.rank_function().map(|h| h[max])
    }

    pub fn map_labels<M>(self, f: impl FnMut(L) -> M) -> FinitePoset<M> {
        FinitePoset {
            labels: self.labels.into_iter().map(f).collect(),
            upper: self.upper,
            lower: self.lower,
            up: self.up,
            down: self.down,
        }
    }

    /// Meet and join tables, or `None` if some pair lacks either.
    pub fn as_lattice(&self) -> Option<Lattice<'_, L>> {
        let m = self.len();
        let mut meet = vec![0u32; m * m];
        let mut join = vec![0u32; m * m];
        let mut scratch = FixedBitSet::with_capacity(m);
        for x in 0..m {
            meet[x * m + x] = x as u32;
            join[x * m + x] = x as u32;
            for y in x + 1..m {
                // The least element of a set, if it exists, comes first in a
                // linear extension; the greatest comes last.
                scratch.clone_from(&self.up[x]);
                scratch.intersect_with(&self.up[y]);
                let j = scratch.ones().next()?;
                if !scratch.is_subset(&self.up[j]) {
                    return None;
                }
                scratch.clone_from(&self.down[x]);
                scratch.intersect_with(&self.down[y]);
                let mt = last_one(&scratch)?;
                if !scratch.is_subset(&self.down[mt]) {
                    return None;
                }
                join[x * m + y] = j as u32;
                join[y * m + x] = j as u32;
                meet[x * m + y] = mt as u32;
                meet[y * m + x] = mt as u32;
            }
        }
        Some(Lattice {
            poset: self,
            meet,
            join,
        })
    }

    pub fn is_lattice(&self) -> bool {
        self.as_lattice().is_some()
    }
}

fn last_one(bits: &FixedBitSet) -> Option<usize> {
    let blocks = bits.as_slice();
    let width = usize::BITS as usize;
    blocks
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &b)| b != 0)
        .map(|(i, &b)| i * width + (width - 1 - b.leading_zeros() as usize))
}

impl<L: Display> FinitePoset<L> {
    /// Text form: one `a < b` line per cover, plus a bare line for each
    /// element with no covers at all.
    pub fn to_cover_list(&self) -> String {
        let mut out = String::new();
        for x in 0..self.len() {
            if self.upper[x].is_empty() && self.lower[x].is_empty() {
                out.push_str(&format!("{}\n", self.labels[x]));
            }
        }
        for (x, y) in self.cover_edges() {
            out.push_str(&format!("{} < {}\n", self.labels[x], self.labels[y]));
        }
        out
    }
}

impl FinitePoset<String> {
    /// Parses the cover-list text format.
    ///
    /// Each nonblank line is either a single element name or a chain
    /// `a < b < ...`. `#` starts a comment. Element order follows first
    /// appearance.
    pub fn parse_cover_list(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut relations = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut chain = Vec::new();
            for token in line.split('<').map(str::trim) {
                if token.is_empty() || token.contains(char::is_whitespace) {
                    return Err(Error::Poset(format!(
                        "line {}: cannot parse {raw:?}",
                        lineno + 1
                    )));
                }
                let id = *index.entry(token.to_string()).or_insert_with(|| {
                    names.push(token.to_string());
                    names.len() - 1
                });
                chain.push(id);
            }
            relations.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
        FinitePoset::from_relations(names, &relations)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }
}

impl<L: fmt::Debug> fmt::Debug for FinitePoset<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("labels", &self.labels)
            .field("covers", &self.cover_edges())
            .finish()
    }
}

/// A poset together with its meet and join tables.
pub struct Lattice<'a, L> {
    poset: &'a FinitePoset<L>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl<L> Lattice<'_, L> {
    pub fn poset(&self) -> &FinitePoset<L> {
        self.poset
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.poset.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.poset.len() + b] as usize
    }

    /// `a <= c  ⟹  a ∨ (b ∧ c) = (a ∨ b) ∧ c` for all triples.
    pub fn is_modular(&self) -> bool {
        let m = self.poset.len();
        for a in 0..m {
            for c in self.poset.up[a].ones() {
                if c == a {
                    continue;
                }
                for b in 0..m {
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        let m = self.poset.len();
        for x in 0..m {
            for y in 0..m {
                for z in y + 1..m {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Whether the poset is isomorphic to the subsets of its atoms.
///
/// With `a` atoms this requires `2^a` elements and the map sending each
/// element to the set of atoms below it to be an order isomorphism onto
/// the full subset lattice.
pub fn is_boolean<L>(poset: &FinitePoset<L>) -> bool {
    if poset.minimum().is_none() {
        return false;
    }
    let atoms = poset.atoms();
    if atoms.len() >= 32 || poset.len() != 1usize << atoms.len() {
        return false;
    }
    let masks: Vec<u32> = (0..poset.len())
        .map(|x| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| poset.leq(a, x))
                .fold(0u32, |m, (bit, _)| m | (1 << bit))
        })
        .collect();
    let mut hit = vec![false; poset.len()];
    for &mask in &masks {
        if std::mem::replace(&mut hit[mask as usize], true) {
            return false;
        }
    }
    (0..poset.len())
        .all(|x| (0..poset.len()).all(|y| poset.leq(x, y) == (masks[x] & !masks[y] == 0)))
}

/// Structural classification of a finite poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeReport {
    #[serde(rename = "lattice")]
    pub is_lattice: bool,
    #[serde(rename = "modular")]
    pub is_modular: bool,
    #[serde(rename = "distributive")]
    pub is_distributive: bool,
    #[serde(rename = "boolean")]
    pub is_boolean: bool,
    pub rank: Option<usize>,
    pub atom_count: usize,
}

impl LatticeReport {
    /// The four hierarchy flags, weakest first.
    pub fn flags(&self) -> [bool; 4] {
        [
            self.is_lattice,
            self.is_modular,
            self.is_distributive,
            self.is_boolean,
        ]
    }

    pub fn same_flags(&self, other: &LatticeReport) -> bool {
        self.flags() == other.flags()
    }

    /// True when no stronger flag is set without the weaker ones.
    pub fn respects_hierarchy(&self) -> bool {
        let f = self.flags();
        f.windows(2).all(|w| w[0] || !w[1])
    }
}

impl Display for LatticeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lattice={} modular={} distributive={} boolean={}",
            self.is_lattice, self.is_modular, self.is_distributive, self.is_boolean
        )
    }
}

/// Classifies a poset down the hierarchy, stopping at the first failure.
pub fn classify<L>(poset: &FinitePoset<L>) -> LatticeReport {
    let mut report = LatticeReport {
        is_lattice: false,
        is_modular: false,
        is_distributive: false,
        is_boolean: false,
        rank: poset.rank(),
        atom_count: poset.atoms().len(),
    };
    let Some(lattice) = poset.as_lattice() else {
        return report;
    };
    report.is_lattice = true;
    report.is_modular = lattice.is_modular();
    if report.is_modular {
        report.is_distributive = lattice.is_distributive();
        if report.is_distributive {
            report.is_boolean = is_boolean(poset);
        }
    }
    report
}
