//! Bruhat and right weak order on `S_n`, and materialisation of intervals.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FinitePoset;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Bruhat,
    Weak,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Bruhat => "bruhat",
            OrderKind::Weak => "weak",
        })
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bruhat" | "strong" => Ok(OrderKind::Bruhat),
            "weak" | "right-weak" => Ok(OrderKind::Weak),
            other => Err(format!("unknown order {other:?} (expected bruhat or weak)")),
        }
    }
}

/// Bruhat comparison by the tableau criterion: for every `k`, the sorted
/// values `v(1..k)` are entrywise at most the sorted values `w(1..k)`.
///
/// # Panics
/// If the degrees differ.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> bool {
    assert_eq!(v.degree(), w.degree(), "bruhat_leq: degree mismatch");
    let n = v.degree();
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for k in 0..n.saturating_sub(1) {
        insert_sorted(&mut a, v.entries()[k]);
        insert_sorted(&mut b, w.entries()[k]);
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

/// Right weak order: `ℓ(w) = ℓ(v) + ℓ(v⁻¹w)`.
///
/// # Panics
/// If the degrees differ.
pub fn weak_leq(v: &Permutation, w: &Permutation) -> bool {
    let quotient = v.inverse().multiply(w).expect("weak_leq: degree mismatch");
    w.length() == v.length() + quotient.length()
}

pub fn leq(kind: OrderKind, v: &Permutation, w: &Permutation) -> bool {
    match kind {
        OrderKind::Bruhat => bruhat_leq(v, w),
        OrderKind::Weak => weak_leq(v, w),
    }
}

/// Elements covered by `w`, sorted.
///
/// Bruhat: `w·(i j)` with `i < j`, `w(i) > w(j)` and no position between
/// them holding a value between `w(j)` and `w(i)` (exactly the
/// transpositions that drop the length by one). Weak: `w σ_i` for each
/// right descent `i`.
pub fn covers_down(w: &Permutation, kind: OrderKind) -> Vec<Permutation> {
    let mut out = match kind {
        OrderKind::Bruhat => bruhat_covers(w, true),
        OrderKind::Weak => w
            .right_descents()
            .into_iter()
            .map(|i| w.right_action_unchecked(i))
            .collect(),
    };
    out.sort();
    out
}

/// Elements covering `w`, sorted.
pub fn covers_up(w: &Permutation, kind: OrderKind) -> Vec<Permutation> {
    let mut out = match kind {
        OrderKind::Bruhat => bruhat_covers(w, false),
        OrderKind::Weak => (1..w.degree())
            .filter(|&i| !w.has_right_descent(i))
            .map(|i| w.right_action_unchecked(i))
            .collect(),
    };
    out.sort();
    out
}

fn bruhat_covers(w: &Permutation, downward: bool) -> Vec<Permutation> {
    let e = w.entries();
    let n = e.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (hi, lo) = if downward { (e[i], e[j]) } else { (e[j], e[i]) };
            if hi > lo && !e[i + 1..j].iter().any(|&m| lo < m && m < hi) {
                out.push(w.swap_positions(i + 1, j + 1));
            }
        }
    }
    out
}

/// A validated interval `[bottom, top]` in one of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntervalSpec {
    bottom: Permutation,
    top: Permutation,
    kind: OrderKind,
}

impl IntervalSpec {
    pub fn new(bottom: Permutation, top: Permutation, kind: OrderKind) -> Result<Self> {
        if bottom.degree() != top.degree() {
            return Err(Error::DegreeMismatch(bottom.degree(), top.degree()));
        }
        if !leq(kind, &bottom, &top) {
            return Err(Error::NotBelow {
                bottom: bottom.to_string(),
                top: top.to_string(),
                kind,
            });
        }
        Ok(Self { bottom, top, kind })
    }

    /// The principal order ideal `[e, top]`.
    pub fn ideal(top: Permutation, kind: OrderKind) -> Self {
        let bottom = Permutation::identity(top.degree()).expect("nonzero degree");
        Self { bottom, top, kind }
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.top.length() - self.bottom.length()
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, {}]", self.kind, self.bottom, self.top)
    }
}

/// Materialises `[bottom, top]` with its cover relation.
///
/// Walks down from `top` along covers, keeping only elements above
/// `bottom`. Every element of the interval lies on a saturated chain to
/// `top` inside the interval, so nothing is missed. Elements are indexed
/// by `(length, one-line notation)`.
pub fn extract_interval(spec: &IntervalSpec) -> FinitePoset<Permutation> {
    let kind = spec.kind;
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = vec![spec.top.clone()];
    index.insert(spec.top.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut covers: Vec<(usize, usize)> = Vec::new();
    while let Some(i) = queue.pop_front() {
        let u = elements[i].clone();
        if u == spec.bottom {
            continue;
        }
        for c in covers_down(&u, kind) {
            if !leq(kind, &spec.bottom, &c) {
                continue;
            }
            let j = *index.entry(c.clone()).or_insert_with(|| {
                elements.push(c);
                queue.push_back(elements.len() - 1);
                elements.len() - 1
            });
            covers.push((j, i));
        }
    }

    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by_cached_key(|&i| (elements[i].length(), elements[i].clone()));
    let mut position = vec![0; elements.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let labels: Vec<Permutation> = order.iter().map(|&i| elements[i].clone()).collect();
    let relations: Vec<(usize, usize)> = covers
        .into_iter()
        .map(|(a, b)| (position[a], position[b]))
        .collect();
    FinitePoset::from_relations(labels, &relations).expect("interval covers are acyclic")
}

pub fn principal_order_ideal(w: &Permutation, kind: OrderKind) -> FinitePoset<Permutation> {
    extract_interval(&IntervalSpec::ideal(w.clone(), kind))
}
