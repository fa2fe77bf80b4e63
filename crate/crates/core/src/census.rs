//! Brute-force enumeration of well-behaved intervals, compared against
//! closed-form Fibonacci and Catalan counts.
//!
//! Three independent counting routes exist:
//! * predicate sweeps over `S_n` using the reduced-word and pattern
//!   characterisations in [`crate::classify`];
//! * structural sweeps that materialise every interval and run
//!   [`crate::lattice::classify`];
//! * constructive generation of the boolean intervals above an atom from
//!   products of distinct generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{
    boolean_over_support_bruhat, boolean_over_support_weak, bruhat_atom_interval_class,
    structural_boolean_over_support,
};
use crate::error::{Error, Result};
use crate::lattice::{classify, LatticeReport};
use crate::order::{extract_interval, principal_order_ideal, IntervalSpec, OrderKind};
use crate::patterns::{is_boolean_element, is_free, is_fully_commutative};
use crate::perm::Permutation;
use crate::words::{support, GeneratorSet, Word};

/// Largest `n` for predicate and constructive counts.
pub const PREDICATE_MAX_N: usize = 9;
/// Default largest `n` for structural sweeps.
pub const STRUCTURAL_MAX_N: usize = 5;
/// Largest `n` for structural sweeps when explicitly allowed.
pub const STRUCTURAL_LARGE_MAX_N: usize = 6;

/// `F_0 = 0`, `F_1 = 1`.
pub fn fib(i: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `C_i = binom(2i, i) / (i + 1)`.
pub fn catalan(i: usize) -> BigUint {
    let mut c = BigUint::one();
    // C_{j+1} = C_j · 2(2j+1) / (j+2)
    for j in 0..i {
        c = c * (2 * (2 * j + 1)) / (j + 2);
    }
    c
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Boolean Bruhat intervals `[σ_k, w]` in `S_n`:
/// `4 F_{2n-4}` for `k ∈ {1, n-1}`, else `16 F_{2k-2} F_{2(n-k)-2}`.
pub fn atom_boolean_formula(n: usize, k: usize) -> BigUint {
    assert!(
        n >= 3 && (1..n).contains(&k),
        "atom_boolean_formula({n}, {k})"
    );
    if k == 1 || k == n - 1 {
        fib(2 * n - 4) * 4u32
    } else {
        fib(2 * k - 2) * fib(2 * (n - k) - 2) * 16u32
    }
}

/// Lattice Bruhat intervals `[σ_k, w]` in `S_n`: the boolean count plus
/// `F_{2n-5} - F_{2k-3} F_{2(n-k)-3}` in the interior.
pub fn atom_lattice_formula(n: usize, k: usize) -> BigUint {
    let boolean = atom_boolean_formula(n, k);
    if k == 1 || k == n - 1 {
        boolean
    } else {
        boolean + fib(2 * n - 5) - fib(2 * k - 3) * fib(2 * (n - k) - 3)
    }
}

/// `((n+1) F_{n+3} + (n-7) F_{n+1}) / 5`, the total number of boolean weak
/// intervals above atoms.
pub fn weak_atom_boolean_total_formula(n: usize) -> BigUint {
    let a = fib(n + 3) * (n + 1);
    let b = fib(n + 1) * n.abs_diff(7);
    let total = if n >= 7 { a + b } else { a - b };
    total / 5u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusClass {
    Lattice,
    ModularOrDistributive,
    Boolean,
    BooleanOverSupport,
}

impl fmt::Display for CensusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusClass::Lattice => "lattice",
            CensusClass::ModularOrDistributive => "modular-or-distributive",
            CensusClass::Boolean => "boolean",
            CensusClass::BooleanOverSupport => "boolean-over-support",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Predicate,
    Structural,
    Constructive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Predicate => "predicate",
            Method::Structural => "structural",
            Method::Constructive => "constructive",
        })
    }
}

fn as_number<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.collect_str(value),
    }
}

/// One counted class compared with its closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub k: Option<usize>,
    pub order: OrderKind,
    pub class: CensusClass,
    #[serde(serialize_with = "as_number")]
    pub counted: BigUint,
    #[serde(serialize_with = "as_number")]
    pub formula: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
    pub method: Method,
}

impl CensusRow {
    fn new(
        n: usize,
        k: Option<usize>,
        order: OrderKind,
        class: CensusClass,
        method: Method,
        counted: impl Into<BigUint>,
        formula: BigUint,
    ) -> Self {
        let counted = counted.into();
        Self {
            n,
            k,
            order,
            class,
            matches: counted == formula,
            counted,
            formula,
            method,
        }
    }

    /// Identifies what was counted, ignoring how.
    pub fn key(&self) -> (usize, Option<usize>, OrderKind, CensusClass) {
        (self.n, self.k, self.order, self.class)
    }
}

/// Which family of counts to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    /// Principal order ideals, both orders.
    PrincipalIdeals,
    /// Boolean Bruhat intervals above each atom, `t(n, k)`.
    AtomBoolean,
    /// All classes above each atom, both orders.
    Atoms,
    /// Boolean over every generator in the support, both orders.
    Support,
}

impl Table {
    pub const ALL: [Table; 4] = [
        Table::PrincipalIdeals,
        Table::AtomBoolean,
        Table::Atoms,
        Table::Support,
    ];
}

impl FromStr for Table {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "3" | "poi" => Ok(Table::PrincipalIdeals),
            "4" | "atom-boolean" => Ok(Table::AtomBoolean),
            "5" | "atoms" => Ok(Table::Atoms),
            "6" | "support" => Ok(Table::Support),
            other => Err(format!(
                "unknown table {other:?} (expected 3, 4, 5 or support)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Predicate sweeps plus constructive generation.
    Predicate,
    Structural,
    Both,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "predicate" => Ok(Mode::Predicate),
            "structural" => Ok(Mode::Structural),
            "both" => Ok(Mode::Both),
            other => Err(format!(
                "unknown mode {other:?} (expected predicate, structural or both)"
            )),
        }
    }
}

/// Result of [`Census::verify`].
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CensusRow>,
    /// Counts of the same class that differ between methods.
    pub disagreements: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty() && self.rows.iter().all(|r| r.matches)
    }
}

/// Runs counts over `S_n`, optionally on a dedicated thread pool.
pub struct Census {
    structural_max: usize,
    pool: Option<rayon::ThreadPool>,
}

impl Default for Census {
    fn default() -> Self {
        Self::new()
    }
}

impl Census {
    pub fn new() -> Self {
        Self {
            structural_max: STRUCTURAL_MAX_N,
            pool: None,
        }
    }

    /// Use a private pool with `workers` threads.
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .ok();
        self
    }

    /// Permit structural sweeps of `S_6`.
    pub fn allow_large_structural(mut self) -> Self {
        self.structural_max = STRUCTURAL_LARGE_MAX_N;
        self
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match &self.pool {
            Some(pool) => pool.install(job),
            None => job(),
        }
    }

    fn check_n(&self, n: usize, min: usize, method: Method) -> Result<()> {
        let max = match method {
            Method::Structural => self.structural_max,
            _ => PREDICATE_MAX_N,
        };
        if n < min || n > max {
            return Err(Error::DegreeOutOfRange { n, min, max });
        }
        Ok(())
    }

    /// Sum of `f` over all of `S_n`, computed in parallel.
    fn tally<const N: usize>(
        &self,
        n: usize,
        f: impl Fn(&Permutation) -> [u64; N] + Sync + Send,
    ) -> [u64; N] {
        let all: Vec<Permutation> = Permutation::all(n).expect("n >= 1").collect();
        self.run(|| {
            all.par_iter().map(&f).reduce(
                || [0; N],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
        })
    }

    /// Principal order ideals: lattice, modular/distributive and boolean
    /// counts in one order.
    pub fn count_poi_classes(
        &self,
        n: usize,
        order: OrderKind,
        method: Method,
    ) -> Result<Vec<CensusRow>> {
        self.check_n(n, 1, method)?;
        let counts = match method {
            Method::Predicate => self.tally(n, |w| {
                let flags = match order {
                    OrderKind::Bruhat => [is_boolean_element(w); 3],
                    OrderKind::Weak => {
                        let fc = is_fully_commutative(w);
                        [true, fc, is_free(w)]
                    }
                };
                flags.map(u64::from)
            }),
            Method::Structural => self.tally(n, |w| {
                structural_counts(&classify(&principal_order_ideal(w, order)))
            }),
            Method::Constructive => {
                return Err(Error::Unsupported(
                    "principal ideals have no constructive count".into(),
                ));
            }
        };
        let formulas = match order {
            OrderKind::Bruhat => [fib(2 * n - 1), fib(2 * n - 1), fib(2 * n - 1)],
            OrderKind::Weak => [factorial(n), catalan(n), fib(n + 1)],
        };
        Ok(rows3(n, None, order, method, counts, formulas))
    }

    /// `t(n, k)` by building every qualifying `x σ_k y` and deduplicating
    /// by the permutation it evaluates to.
    pub fn count_bruhat_atom_boolean(&self, n: usize, k: usize) -> Result<CensusRow> {
        self.check_n(n, 3, Method::Constructive)?;
        check_k(n, k)?;
        let found = constructive_atom_boolean(n, k);
        Ok(CensusRow::new(
            n,
            Some(k),
            OrderKind::Bruhat,
            CensusClass::Boolean,
            Method::Constructive,
            found.len() as u64,
            atom_boolean_formula(n, k),
        ))
    }

    /// Bruhat `[σ_k, w]`: lattice, modular/distributive and boolean counts.
    pub fn count_bruhat_atom(&self, n: usize, k: usize, method: Method) -> Result<Vec<CensusRow>> {
        self.check_n(n, 3, method)?;
        check_k(n, k)?;
        let atom = Permutation::generator(n, k)?;
        let counts = match method {
            Method::Predicate => self.tally(n, |w| {
                if !support(w).contains(k) {
                    return [0; 3];
                }
                let r = bruhat_atom_interval_class(k, w).expect("atom below w");
                [
                    r.is_lattice,
                    r.is_modular && r.is_distributive,
                    r.is_boolean,
                ]
                .map(u64::from)
            }),
            Method::Structural => self.tally(n, |w| {
                match IntervalSpec::new(atom.clone(), w.clone(), OrderKind::Bruhat) {
                    Ok(spec) => structural_counts(&classify(&extract_interval(&spec))),
                    Err(_) => [0; 3],
                }
            }),
            Method::Constructive => {
                return Ok(vec![self.count_bruhat_atom_boolean(n, k)?]);
            }
        };
        let boolean = atom_boolean_formula(n, k);
        let formulas = [atom_lattice_formula(n, k), boolean.clone(), boolean];
        Ok(rows3(
            n,
            Some(k),
            OrderKind::Bruhat,
            method,
            counts,
            formulas,
        ))
    }

    pub fn count_bruhat_atom_lattice(
        &self,
        n: usize,
        k: usize,
        method: Method,
    ) -> Result<CensusRow> {
        Ok(self.count_bruhat_atom(n, k, method)?.swap_remove(0))
    }

    /// Weak `[σ_k, w]` in one class.
    pub fn count_weak_atom(
        &self,
        n: usize,
        k: usize,
        class: CensusClass,
        method: Method,
    ) -> Result<CensusRow> {
        let rows = self.count_weak_atom_classes(n, k, method)?;
        rows.into_iter()
            .find(|r| r.class == class)
            .ok_or_else(|| Error::Unsupported(format!("no weak atom count for class {class}")))
    }

    /// Weak `[σ_k, w]`: lattice, modular/distributive and boolean counts.
    pub fn count_weak_atom_classes(
        &self,
        n: usize,
        k: usize,
        method: Method,
    ) -> Result<Vec<CensusRow>> {
        self.check_n(n, 2, method)?;
        check_k(n, k)?;
        let atom = Permutation::generator(n, k)?;
        let counts = match method {
            Method::Predicate | Method::Constructive => self.tally(n, |w| {
                if !w.has_left_descent(k) {
                    return [0; 3];
                }
                let quotient = w.left_action_unchecked(k);
                [true, is_fully_commutative(&quotient), is_free(&quotient)].map(u64::from)
            }),
            Method::Structural => self.tally(n, |w| {
                match IntervalSpec::new(atom.clone(), w.clone(), OrderKind::Weak) {
                    Ok(spec) => structural_counts(&classify(&extract_interval(&spec))),
                    Err(_) => [0; 3],
                }
            }),
        };
        let formulas = [
            factorial(n) / 2u32,
            catalan(n) - catalan(n - 1),
            fib(k + 1) * fib(n - k + 1),
        ];
        Ok(rows3(n, Some(k), OrderKind::Weak, method, counts, formulas))
    }

    /// Elements whose intervals above every support generator are boolean.
    pub fn count_boolean_over_support(
        &self,
        n: usize,
        order: OrderKind,
        method: Method,
    ) -> Result<CensusRow> {
        self.check_n(n, 2, method)?;
        let [count] = match method {
            Method::Structural => self.tally(n, |w| {
                [u64::from(structural_boolean_over_support(w, order))]
            }),
            _ => self.tally(n, |w| {
                let hit = match order {
                    OrderKind::Bruhat => boolean_over_support_bruhat(w),
                    OrderKind::Weak => boolean_over_support_weak(w),
                };
                [u64::from(hit)]
            }),
        };
        let formula = match order {
            OrderKind::Bruhat => fib(2 * n - 1) + (n - 2),
            OrderKind::Weak => fib(n + 1),
        };
        Ok(CensusRow::new(
            n,
            None,
            order,
            CensusClass::BooleanOverSupport,
            method,
            count,
            formula,
        ))
    }

    /// All rows of one table for one `n` and one method.
    pub fn table(&self, table: Table, n: usize, method: Method) -> Result<Vec<CensusRow>> {
        let mut rows = Vec::new();
        match table {
            Table::PrincipalIdeals => {
                for order in [OrderKind::Bruhat, OrderKind::Weak] {
                    rows.extend(self.count_poi_classes(n, order, method)?);
                }
            }
            Table::AtomBoolean => {
                for k in 1..n {
                    match method {
                        Method::Structural => rows.extend(
                            self.count_bruhat_atom(n, k, method)?
                                .into_iter()
                                .filter(|r| r.class == CensusClass::Boolean),
                        ),
                        _ => rows.push(self.count_bruhat_atom_boolean(n, k)?),
                    }
                }
            }
            Table::Atoms => {
                let bruhat_method = if method == Method::Constructive {
                    Method::Predicate
                } else {
                    method
                };
                for k in 1..n {
                    if n >= 3 {
                        rows.extend(self.count_bruhat_atom(n, k, bruhat_method)?);
                    }
                    rows.extend(self.count_weak_atom_classes(n, k, method)?);
                }
            }
            Table::Support => {
                for order in [OrderKind::Bruhat, OrderKind::Weak] {
                    rows.push(self.count_boolean_over_support(n, order, method)?);
                }
            }
        }
        Ok(rows)
    }

    /// Runs the selected tables for every `n` in the range. Rows from
    /// different methods that count the same thing must agree.
    pub fn verify(
        &self,
        n_range: std::ops::RangeInclusive<usize>,
        mode: Mode,
        tables: &[Table],
    ) -> Result<VerifyReport> {
        let methods: &[Method] = match mode {
            Mode::Predicate => &[Method::Predicate],
            Mode::Structural => &[Method::Structural],
            Mode::Both => &[Method::Predicate, Method::Structural],
        };
        let mut rows = Vec::new();
        for n in n_range {
            for &table in tables {
                let min_n = match table {
                    Table::AtomBoolean => 3,
                    _ => 2,
                };
                if n < min_n {
                    continue;
                }
                for &method in methods {
                    rows.extend(self.table(table, n, method)?);
                }
            }
        }

        let mut by_key: BTreeMap<_, Vec<&CensusRow>> = BTreeMap::new();
        for row in &rows {
            by_key.entry(row.key()).or_default().push(row);
        }
        let disagreements = by_key
            .values()
            .filter(|group| group.iter().any(|r| r.counted != group[0].counted))
            .map(|group| {
                let parts: Vec<String> = group
                    .iter()
                    .map(|r| format!("{}={}", r.method, r.counted))
                    .collect();
                let r = group[0];
                format!(
                    "n={} k={} {} {}: {}",
                    r.n,
                    r.k.map_or("-".to_string(), |k| k.to_string()),
                    r.order,
                    r.class,
                    parts.join(", ")
                )
            })
            .collect();
        Ok(VerifyReport {
            rows,
            disagreements,
        })
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::GeneratorOutOfRange {
            index: k,
            degree: n,
        });
    }
    Ok(())
}

fn structural_counts(r: &LatticeReport) -> [u64; 3] {
    [
        r.is_lattice,
        r.is_modular && r.is_distributive,
        r.is_boolean,
    ]
    .map(u64::from)
}

fn rows3(
    n: usize,
    k: Option<usize>,
    order: OrderKind,
    method: Method,
    counts: [u64; 3],
    formulas: [BigUint; 3],
) -> Vec<CensusRow> {
    let classes = [
        CensusClass::Lattice,
        CensusClass::ModularOrDistributive,
        CensusClass::Boolean,
    ];
    classes
        .into_iter()
        .zip(counts)
        .zip(formulas)
        .map(|((class, count), formula)| CensusRow::new(n, k, order, class, method, count, formula))
        .collect()
}

/// Every product of distinct generators drawn from `allowed`, one reduced
/// word per element.
///
/// Such an element is fixed by its letter set together with, for each pair
/// of adjacent letters `i, i+1` in the set, which of the two comes first;
/// all other pairs commute.
pub fn distinct_generator_products(allowed: GeneratorSet) -> Vec<Vec<u8>> {
    let letters: Vec<usize> = allowed.iter().collect();
    let mut out = Vec::new();
    for subset in 0u64..(1 << letters.len()) {
        let chosen: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(b, _)| subset & (1 << b) != 0)
            .map(|(_, &a)| a)
            .collect();
        let pairs: Vec<usize> = chosen
            .windows(2)
            .filter(|w| w[1] == w[0] + 1)
            .map(|w| w[0])
            .collect();
        for orientation in 0u64..(1 << pairs.len()) {
            // `i` must precede `i+1` unless the pair's bit is set
            let after = |i: usize| -> bool {
                pairs
                    .iter()
                    .position(|&p| p == i)
                    .is_some_and(|b| orientation & (1 << b) != 0)
            };
            let mut remaining = chosen.clone();
            let mut word = Vec::with_capacity(chosen.len());
            while !remaining.is_empty() {
                let pos = remaining
                    .iter()
                    .position(|&a| {
                        let blocked_by_left =
                            remaining.contains(&(a.wrapping_sub(1))) && !after(a - 1);
                        let blocked_by_right = remaining.contains(&(a + 1)) && after(a);
                        !blocked_by_left && !blocked_by_right
                    })
                    .expect("path orientations are acyclic");
                word.push(remaining.remove(pos) as u8);
            }
            out.push(word);
        }
    }
    out
}

/// The set `T(n, k)` of `w` with `[σ_k, w]` boolean, built from words
/// `x σ_k y`, mapped to the number of copies of `σ_{k+1}` in the word that
/// produced it.
pub fn constructive_atom_boolean(n: usize, k: usize) -> HashMap<Permutation, usize> {
    let allowed = GeneratorSet::from_letters((1..n).filter(|&i| i != k));
    let neighbours = GeneratorSet::from_letters(
        [k.wrapping_sub(1), k + 1]
            .into_iter()
            .filter(|&i| i >= 1 && i < n),
    );
    let products: Vec<(Vec<u8>, GeneratorSet)> = distinct_generator_products(allowed)
        .into_iter()
        .map(|w| {
            let set = GeneratorSet::from_letters(w.iter().map(|&a| a as usize));
            (w, set)
        })
        .collect();
    let mut found = HashMap::new();
    for (x, xs) in &products {
        for (y, ys) in &products {
            if !xs.intersection(*ys).is_subset(neighbours) {
                continue;
            }
            let mut letters = Vec::with_capacity(x.len() + y.len() + 1);
            letters.extend_from_slice(x);
            letters.push(k as u8);
            letters.extend_from_slice(y);
            let word = Word::from_raw(n, letters);
            let w = word.evaluate();
            if w.length() == word.len() {
                let copies = word
                    .letters()
                    .iter()
                    .filter(|&&a| a as usize == k + 1)
                    .count();
                found.entry(w).or_insert(copies);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_and_catalan() {
        assert_eq!(fib(7), BigUint::from(13u32));
        assert_eq!(fib(0), BigUint::zero());
        assert_eq!(fib(1), BigUint::one());
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(catalan(0), BigUint::one());
        // beyond u64
        assert_eq!(fib(100).to_string(), "354224848179261915075");
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
    }

    #[test]
    fn closed_forms_small_values() {
        assert_eq!(atom_boolean_formula(3, 1), BigUint::from(4u32));
        assert_eq!(atom_boolean_formula(4, 2), BigUint::from(16u32));
        assert_eq!(atom_boolean_formula(9, 4), BigUint::from(2688u32));
        assert_eq!(atom_lattice_formula(4, 1), BigUint::from(12u32));
        assert_eq!(atom_lattice_formula(4, 2), BigUint::from(17u32));
        assert_eq!(atom_lattice_formula(5, 2), BigUint::from(51u32));
    }

    #[test]
    fn distinct_products_count_is_odd_fibonacci() {
        // m consecutive letters generate S_{m+1}: F_{2m+1} boolean elements
        for m in 0..8 {
            let letters = GeneratorSet::from_letters(1..=m);
            let products = distinct_generator_products(letters);
            assert_eq!(BigUint::from(products.len()), fib(2 * m + 1), "m = {m}");
            let distinct: std::collections::HashSet<_> = products
                .iter()
                .map(|w| Word::from_raw(m + 1, w.clone()).evaluate())
                .collect();
            assert_eq!(distinct.len(), products.len());
        }
    }

    #[test]
    fn poi_census_small() {
        let census = Census::new();
        let rows = census
            .count_poi_classes(4, OrderKind::Bruhat, Method::Predicate)
            .unwrap();
        assert!(rows
            .iter()
            .all(|r| r.counted == BigUint::from(13u32) && r.matches));
        let rows = census
            .count_poi_classes(4, OrderKind::Weak, Method::Predicate)
            .unwrap();
        let counted: Vec<u64> = rows.iter().map(|r| r.counted.to_u64().unwrap()).collect();
        assert_eq!(counted, [24, 14, 5]);
    }

    #[test]
    fn atom_census_examples() {
        let census = Census::new();
        assert_eq!(
            census.count_bruhat_atom_boolean(3, 1).unwrap().counted,
            BigUint::from(4u32)
        );
        assert_eq!(
            census.count_bruhat_atom_boolean(4, 2).unwrap().counted,
            BigUint::from(16u32)
        );
        let row = census
            .count_bruhat_atom_lattice(4, 2, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(17u32));
        assert!(row.matches);
        let row = census
            .count_weak_atom(4, 1, CensusClass::Boolean, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(3u32));
        let row = census
            .count_weak_atom(4, 2, CensusClass::Lattice, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(12u32));
        let row = census
            .count_weak_atom(4, 3, CensusClass::ModularOrDistributive, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(9u32));
    }

    #[test]
    fn support_census_examples() {
        let census = Census::new();
        let row = census
            .count_boolean_over_support(4, OrderKind::Bruhat, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(15u32));
        let row = census
            .count_boolean_over_support(4, OrderKind::Weak, Method::Predicate)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(5u32));
        let row = census
            .count_boolean_over_support(2, OrderKind::Bruhat, Method::Structural)
            .unwrap();
        assert_eq!(row.counted, BigUint::from(2u32));
        assert!(row.matches);
    }

    #[test]
    fn range_checks() {
        let census = Census::new();
        assert!(census
            .count_poi_classes(6, OrderKind::Bruhat, Method::Structural)
            .is_err());
        assert!(census
            .count_poi_classes(10, OrderKind::Bruhat, Method::Predicate)
            .is_err());
        assert!(census.count_bruhat_atom_boolean(4, 4).is_err());
        assert!(census.count_bruhat_atom_boolean(2, 1).is_err());
        let large = Census::new().allow_large_structural();
        assert!(large
            .count_boolean_over_support(6, OrderKind::Weak, Method::Structural)
            .is_ok());
    }

    #[test]
    fn row_serialises_with_match_field() {
        let row = Census::new().count_bruhat_atom_boolean(3, 2).unwrap();
        let json = serde_json::to_value(&row).unwrap();
        assert_eq!(json["match"], true);
        assert_eq!(json["counted"], 4);
        assert_eq!(json["k"], 2);
        assert_eq!(json["class"], "boolean");
        assert_eq!(json["order"], "bruhat");
    }
}
