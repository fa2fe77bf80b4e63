//! Lattice, modular, distributive and boolean intervals in the Bruhat and
//! right weak orders of the symmetric group.
//!
//! ```
//! use permlattice::{classify, extract_interval, IntervalSpec, OrderKind, Permutation};
//!
//! let bottom: Permutation = "1324".parse().unwrap();
//! let top: Permutation = "3412".parse().unwrap();
//! let spec = IntervalSpec::new(bottom, top, OrderKind::Bruhat).unwrap();
//! let report = classify(&extract_interval(&spec));
//! assert!(report.is_lattice && !report.is_modular);
//! ```

pub mod census;
pub mod classify;
pub mod error;
pub mod hasse;
pub mod iso;
pub mod lattice;
pub mod order;
pub mod patterns;
pub mod perm;
pub mod words;

pub use census::{catalan, fib, Census, CensusClass, CensusRow, Method, Mode, Table, VerifyReport};
pub use classify::{
    boolean_over_support_bruhat, boolean_over_support_weak, bruhat_atom_interval_boolean,
    bruhat_atom_interval_class, bruhat_atom_interval_lattice, poi_bruhat_class, poi_weak_class,
    predicate_class, weak_interval_class, TheoremReport,
};
pub use error::{Error, Result};
pub use hasse::emit_hasse;
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use lattice::{classify, is_boolean, FinitePoset, Lattice, LatticeReport};
pub use order::{
    bruhat_leq, extract_interval, principal_order_ideal, weak_leq, IntervalSpec, OrderKind,
};
pub use patterns::{is_boolean_element, is_free, is_fully_commutative, SignedPattern};
pub use perm::Permutation;
pub use words::{canonical_word, reduced_words, support, GeneratorSet, Word};
