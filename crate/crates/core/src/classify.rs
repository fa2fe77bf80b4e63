//! Characterisations of well-behaved intervals by reduced words and
//! patterns, independent of the structural engine in [`crate::lattice`].
//!
//! Every predicate here answers from the group element alone; the
//! [`TheoremReport`] pairs it with the structural classification of the
//! materialised interval so the two can be compared.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{classify, LatticeReport};
use crate::order::{bruhat_leq, covers_up, extract_interval, weak_leq, IntervalSpec, OrderKind};
use crate::patterns::{is_free, is_fully_commutative};
use crate::perm::Permutation;
use crate::words::{is_product_of_distinct_generators, support, GeneratorSet, Word};

fn report(flags: [bool; 4], rank: usize, atom_count: usize) -> LatticeReport {
    LatticeReport {
        is_lattice: flags[0],
        is_modular: flags[1],
        is_distributive: flags[2],
        is_boolean: flags[3],
        rank: Some(rank),
        atom_count,
    }
}

/// Bruhat `[e, w]`: the whole hierarchy collapses to "w is a product of
/// distinct generators".
pub fn poi_bruhat_class(w: &Permutation) -> LatticeReport {
    let distinct = is_product_of_distinct_generators(w);
    report([distinct; 4], w.length(), support(w).len())
}

/// Weak `[e, w]`: always a lattice; modular and distributive exactly when
/// `w` is fully commutative; boolean exactly when `w` is free.
pub fn poi_weak_class(w: &Permutation) -> LatticeReport {
    let fc = is_fully_commutative(w);
    report(
        [true, fc, fc, is_free(w)],
        w.length(),
        w.left_descents().len(),
    )
}

/// Weak `[v, w]`, classified through the quotient `v⁻¹w`.
pub fn weak_interval_class(v: &Permutation, w: &Permutation) -> Result<LatticeReport> {
    if v.degree() != w.degree() {
        return Err(Error::DegreeMismatch(v.degree(), w.degree()));
    }
    if !weak_leq(v, w) {
        return Err(Error::NotBelow {
            bottom: v.to_string(),
            top: w.to_string(),
            kind: OrderKind::Weak,
        });
    }
    Ok(poi_weak_class(&v.inverse().multiply(w)?))
}

fn check_atom(k: usize, w: &Permutation) -> Result<Permutation> {
    let atom = Permutation::generator(w.degree(), k)?;
    if !bruhat_leq(&atom, w) {
        return Err(Error::NotBelow {
            bottom: atom.to_string(),
            top: w.to_string(),
            kind: OrderKind::Bruhat,
        });
    }
    Ok(atom)
}

fn left_descent_mask(u: &Permutation) -> Vec<usize> {
    let mut pos = vec![0usize; u.degree() + 1];
    for (p, &v) in u.entries().iter().enumerate() {
        pos[v as usize] = p;
    }
    (1..u.degree()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

/// A reduced word `x σ_k y` of `w` such that `x` and `y` each have distinct
/// letters, neither uses `σ_k`, and they share no letter other than
/// `σ_{k-1}` or `σ_{k+1}`. Such a word exists exactly when `[σ_k, w]` is
/// boolean.
///
/// Reduced words are explored letter by letter from the left (a word can
/// start with `i` iff `i` is a left descent), pruning as soon as a
/// constraint fails.
pub fn bruhat_atom_boolean_witness(k: usize, w: &Permutation) -> Result<Option<Word>> {
    check_atom(k, w)?;
    let mut visited = HashSet::new();
    let mut letters = Vec::new();
    let found = boolean_search(
        k,
        w,
        GeneratorSet::EMPTY,
        GeneratorSet::EMPTY,
        false,
        &mut letters,
        &mut visited,
    );
    Ok(found.then(|| Word::from_raw(w.degree(), letters)))
}

type SearchKey = (Permutation, GeneratorSet, GeneratorSet, bool);

fn boolean_search(
    k: usize,
    u: &Permutation,
    left: GeneratorSet,
    right: GeneratorSet,
    placed: bool,
    letters: &mut Vec<u8>,
    visited: &mut HashSet<SearchKey>,
) -> bool {
    if u.is_identity() {
        return placed;
    }
    // every remaining letter needs a free slot in x, σ_k or y
    let n = u.degree();
    let y_slots = (1..n)
        .filter(|&i| i != k && !right.contains(i) && (!left.contains(i) || i.abs_diff(k) == 1))
        .count();
    let x_slots = if placed {
        0
    } else {
        1 + (1..n).filter(|&i| i != k && !left.contains(i)).count()
    };
    if u.length() > x_slots + y_slots {
        return false;
    }
    if !visited.insert((u.clone(), left, right, placed)) {
        return false;
    }
    for i in left_descent_mask(u) {
        let next = u.left_action_unchecked(i);
        let step = if !placed {
            if i == k {
                Some((left, right, true))
            } else if !left.contains(i) {
                Some((left.with(i), right, false))
            } else {
                None
            }
        } else if i == k || right.contains(i) || (left.contains(i) && i.abs_diff(k) != 1) {
            None
        } else {
            Some((left, right.with(i), true))
        };
        if let Some((l, r, p)) = step {
            letters.push(i as u8);
            if boolean_search(k, &next, l, r, p, letters, visited) {
                return true;
            }
            letters.pop();
        }
    }
    false
}

/// A reduced word `x (σ_k σ_{k-1} σ_{k+1} σ_k) y` of `w` with `x`, `y`
/// disjoint products of distinct generators avoiding `σ_{k-1}, σ_k,
/// σ_{k+1}`. Such a word makes `[σ_k, w]` a lattice that is not modular.
///
/// The form needs both neighbours of `σ_k`, so it never exists for
/// `k ∈ {1, n-1}`.
pub fn bruhat_atom_lattice_witness(k: usize, w: &Permutation) -> Result<Option<Word>> {
    check_atom(k, w)?;
    let n = w.degree();
    if k < 2 || k + 2 > n {
        return Ok(None);
    }
    let mut visited = HashSet::new();
    let mut letters = Vec::new();
    let found = crown_free_search(
        k,
        w,
        GeneratorSet::EMPTY,
        GeneratorSet::EMPTY,
        false,
        &mut letters,
        &mut visited,
    );
    Ok(found.then(|| Word::from_raw(n, letters)))
}

fn crown_free_search(
    k: usize,
    u: &Permutation,
    left: GeneratorSet,
    right: GeneratorSet,
    placed: bool,
    letters: &mut Vec<u8>,
    visited: &mut HashSet<SearchKey>,
) -> bool {
    if placed && u.is_identity() {
        return true;
    }
    let near = |i: usize| i.abs_diff(k) <= 1;
    let n = u.degree();
    let free = (1..n).filter(|&i| !near(i) && !left.contains(i));
    let y_slots = free.clone().filter(|&i| !right.contains(i)).count();
    let x_slots = if placed { 0 } else { 4 + free.count() };
    if u.length() > x_slots + y_slots {
        return false;
    }
    if !visited.insert((u.clone(), left, right, placed)) {
        return false;
    }
    if !placed {
        let block = [k, k - 1, k + 1, k];
        let mut v = u.clone();
        if block.iter().all(|&i| {
            let ok = v.has_left_descent(i);
            if ok {
                v = v.left_action_unchecked(i);
            }
            ok
        }) {
            letters.extend(block.iter().map(|&i| i as u8));
            if crown_free_search(k, &v, left, right, true, letters, visited) {
                return true;
            }
            letters.truncate(letters.len() - 4);
        }
    }
    for i in left_descent_mask(u) {
        if near(i) || left.contains(i) || (placed && right.contains(i)) {
            continue;
        }
        let (l, r) = if placed {
            (left, right.with(i))
        } else {
            (left.with(i), right)
        };
        letters.push(i as u8);
        if crown_free_search(
            k,
            &u.left_action_unchecked(i),
            l,
            r,
            placed,
            letters,
            visited,
        ) {
            return true;
        }
        letters.pop();
    }
    false
}

/// Whether Bruhat `[σ_k, w]` is boolean (equivalently modular, or
/// distributive).
pub fn bruhat_atom_interval_boolean(k: usize, w: &Permutation) -> Result<bool> {
    Ok(bruhat_atom_boolean_witness(k, w)?.is_some())
}

/// Whether Bruhat `[σ_k, w]` is a lattice.
pub fn bruhat_atom_interval_lattice(k: usize, w: &Permutation) -> Result<bool> {
    Ok(bruhat_atom_interval_boolean(k, w)? || bruhat_atom_lattice_witness(k, w)?.is_some())
}

/// Full report for Bruhat `[σ_k, w]`. When both forms exist the boolean
/// one wins.
pub fn bruhat_atom_interval_class(k: usize, w: &Permutation) -> Result<LatticeReport> {
    let atom = check_atom(k, w)?;
    let flags = if bruhat_atom_interval_boolean(k, w)? {
        [true; 4]
    } else if bruhat_atom_lattice_witness(k, w)?.is_some() {
        [true, false, false, false]
    } else {
        [false; 4]
    };
    let atoms = covers_up(&atom, OrderKind::Bruhat)
        .iter()
        .filter(|c| bruhat_leq(c, w))
        .count();
    Ok(report(flags, w.length() - 1, atoms))
}

/// `σ_{k+1} σ_k σ_{k+1}` for some `k`: values `k..k+2` reversed in place.
fn is_short_braid(w: &Permutation) -> bool {
    w.length() == 3
        && (1..w.degree().saturating_sub(1)).any(|k| {
            Word::from_raw(w.degree(), vec![k as u8 + 1, k as u8, k as u8 + 1]).evaluate() == *w
        })
}

/// Bruhat `[σ, w]` is boolean for every `σ` in the support of `w`.
pub fn boolean_over_support_bruhat(w: &Permutation) -> bool {
    is_product_of_distinct_generators(w) || is_short_braid(w)
}

/// Weak `[σ, w]` is boolean for every `σ` in the support of `w`.
pub fn boolean_over_support_weak(w: &Permutation) -> bool {
    is_free(w)
}

/// The support condition checked directly on materialised intervals. In
/// the weak order a support generator not below `w` fails the condition.
pub fn structural_boolean_over_support(w: &Permutation, kind: OrderKind) -> bool {
    support(w).iter().all(|k| {
        let atom = Permutation::generator(w.degree(), k).expect("support index in range");
        match IntervalSpec::new(atom, w.clone(), kind) {
            Ok(spec) => classify(&extract_interval(&spec)).is_boolean,
            Err(_) => false,
        }
    })
}

/// The characterisation that applies to an interval, if any: every weak
/// interval, Bruhat principal order ideals, and Bruhat intervals above an
/// atom.
pub fn predicate_class(spec: &IntervalSpec) -> Option<LatticeReport> {
    let (v, w) = (spec.bottom(), spec.top());
    match spec.kind() {
        OrderKind::Weak => weak_interval_class(v, w).ok(),
        OrderKind::Bruhat if v.is_identity() => Some(poi_bruhat_class(w)),
        OrderKind::Bruhat if v.length() == 1 => {
            let k = v.right_descents()[0];
            bruhat_atom_interval_class(k, w).ok()
        }
        OrderKind::Bruhat => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub subject: IntervalSpec,
    pub predicate_result: Option<LatticeReport>,
    pub structural_result: Option<LatticeReport>,
    /// Flag-for-flag equality when both results are present.
    pub agree: bool,
}

impl TheoremReport {
    pub fn new(spec: &IntervalSpec, structural: bool) -> Self {
        let predicate_result = predicate_class(spec);
        let structural_result = structural.then(|| classify(&extract_interval(spec)));
        let agree = match (&predicate_result, &structural_result) {
            (Some(p), Some(s)) => p.same_flags(s),
            _ => true,
        };
        Self {
            subject: spec.clone(),
            predicate_result,
            structural_result,
            agree,
        }
    }
}
