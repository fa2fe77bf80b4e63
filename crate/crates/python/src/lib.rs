//! Python bindings: `import permlattice_py`.

use num_bigint::BigUint;
use permlattice::census::{self, Census, Method, Mode, Table};
use permlattice::{lattice, order, patterns, words};
use permlattice::{FinitePoset, IntervalSpec, OrderKind, Permutation, TheoremReport};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "Permutation",
    module = "permlattice_py",
    frozen,
    eq,
    ord,
    hash,
    str,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyPermutation(Permutation);

impl std::fmt::Display for PyPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A `Permutation`, a one-line string ("3412" or "3,4,1,2") or a list of ints.
fn to_perm(obj: &Bound<'_, PyAny>) -> PyResult<Permutation> {
    if let Ok(p) = obj.extract::<PyRef<'_, PyPermutation>>() {
        return Ok(p.0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(value_error);
    }
    if let Ok(v) = obj.extract::<Vec<usize>>() {
        return Permutation::new(v).map_err(value_error);
    }
    Err(PyTypeError::new_err(
        "expected a Permutation, a one-line string or a list of ints",
    ))
}

// Vec<u8> would cross over as `bytes`
fn letters(word: &words::Word) -> Vec<usize> {
    word.letters().iter().map(|&a| a as usize).collect()
}

fn to_order(s: &str) -> PyResult<OrderKind> {
    s.parse().map_err(PyValueError::new_err)
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn py_new(one_line: &Bound<'_, PyAny>) -> PyResult<Self> {
        to_perm(one_line).map(Self)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        Permutation::identity(n).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn longest(n: usize) -> PyResult<Self> {
        Permutation::longest(n).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn generator(n: usize, i: usize) -> PyResult<Self> {
        Permutation::generator(n, i).map(Self).map_err(value_error)
    }

    /// All of `S_n` in lexicographic order.
    #[staticmethod]
    fn all(n: usize) -> PyResult<Vec<Self>> {
        Ok(Permutation::all(n)
            .map_err(value_error)?
            .map(Self)
            .collect())
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn entries(&self) -> Vec<usize> {
        self.0.entries().iter().map(|&x| x as usize).collect()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0
            .multiply(&to_perm(other)?)
            .map(Self)
            .map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.degree()
    }

    /// `w σ_i`: swap positions `i` and `i+1`.
    fn right_action(&self, i: usize) -> PyResult<Self> {
        self.0.right_action(i).map(Self).map_err(value_error)
    }

    /// `σ_i w`: swap values `i` and `i+1`.
    fn left_action(&self, i: usize) -> PyResult<Self> {
        self.0.left_action(i).map(Self).map_err(value_error)
    }

    fn right_descents(&self) -> Vec<usize> {
        self.0.right_descents()
    }

    fn left_descents(&self) -> Vec<usize> {
        self.0.left_descents()
    }

    fn reduced_words(&self) -> PyResult<Vec<Vec<usize>>> {
        let all = words::reduced_words(&self.0).map_err(value_error)?;
        Ok(all.iter().map(letters).collect())
    }

    fn count_reduced_words(&self) -> u128 {
        words::count_reduced_words(&self.0)
    }

    fn canonical_word(&self) -> Vec<usize> {
        letters(&words::canonical_word(&self.0))
    }

    fn support(&self) -> Vec<usize> {
        words::support(&self.0).iter().collect()
    }

    fn is_boolean_element(&self) -> bool {
        patterns::is_boolean_element(&self.0)
    }

    fn is_fully_commutative(&self) -> bool {
        patterns::is_fully_commutative(&self.0)
    }

    fn is_free(&self) -> bool {
        patterns::is_free(&self.0)
    }

    fn contains_pattern(&self, pattern: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(patterns::contains_pattern(&self.0, &to_perm(pattern)?))
    }
}

#[pyclass(
    name = "LatticeReport",
    module = "permlattice_py",
    frozen,
    eq,
    get_all,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyLatticeReport {
    is_lattice: bool,
    is_modular: bool,
    is_distributive: bool,
    is_boolean: bool,
    rank: Option<usize>,
    atom_count: usize,
}

impl From<lattice::LatticeReport> for PyLatticeReport {
    fn from(r: lattice::LatticeReport) -> Self {
        Self {
            is_lattice: r.is_lattice,
            is_modular: r.is_modular,
            is_distributive: r.is_distributive,
            is_boolean: r.is_boolean,
            rank: r.rank,
            atom_count: r.atom_count,
        }
    }
}

#[pymethods]
impl PyLatticeReport {
    fn __repr__(&self) -> String {
        format!(
            "LatticeReport(lattice={}, modular={}, distributive={}, boolean={}, rank={:?}, atom_count={})",
            self.is_lattice, self.is_modular, self.is_distributive, self.is_boolean, self.rank, self.atom_count
        )
    }
}

#[pyclass(name = "TheoremReport", module = "permlattice_py", frozen, get_all)]
pub struct PyTheoremReport {
    bottom: PyPermutation,
    top: PyPermutation,
    order: String,
    predicate: Option<PyLatticeReport>,
    structural: Option<PyLatticeReport>,
    agree: bool,
}

impl From<TheoremReport> for PyTheoremReport {
    fn from(r: TheoremReport) -> Self {
        Self {
            bottom: PyPermutation(r.subject.bottom().clone()),
            top: PyPermutation(r.subject.top().clone()),
            order: r.subject.kind().to_string(),
            predicate: r.predicate_result.map(Into::into),
            structural: r.structural_result.map(Into::into),
            agree: r.agree,
        }
    }
}

fn spec(bottom: &Bound<'_, PyAny>, top: &Bound<'_, PyAny>, order: &str) -> PyResult<IntervalSpec> {
    IntervalSpec::new(to_perm(bottom)?, to_perm(top)?, to_order(order)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (v, w, order = "bruhat"))]
fn leq(v: &Bound<'_, PyAny>, w: &Bound<'_, PyAny>, order: &str) -> PyResult<bool> {
    let (v, w) = (to_perm(v)?, to_perm(w)?);
    if v.degree() != w.degree() {
        return Err(value_error(format!(
            "degree mismatch: {} vs {}",
            v.degree(),
            w.degree()
        )));
    }
    Ok(order::leq(to_order(order)?, &v, &w))
}

/// Predicate and (optionally) structural classification of `[bottom, top]`.
#[pyfunction]
#[pyo3(signature = (bottom, top, order = "bruhat", structural = true))]
fn classify_interval(
    bottom: &Bound<'_, PyAny>,
    top: &Bound<'_, PyAny>,
    order: &str,
    structural: bool,
) -> PyResult<PyTheoremReport> {
    Ok(TheoremReport::new(&spec(bottom, top, order)?, structural).into())
}

/// Structural classification of the principal order ideal below `w`.
#[pyfunction]
#[pyo3(signature = (w, order = "bruhat"))]
fn classify_poi(w: &Bound<'_, PyAny>, order: &str) -> PyResult<PyLatticeReport> {
    let w = to_perm(w)?;
    Ok(lattice::classify(&order::principal_order_ideal(&w, to_order(order)?)).into())
}

/// Classifies a poset written as "a < b" lines.
#[pyfunction]
fn classify_cover_list(text: &str) -> PyResult<PyLatticeReport> {
    let poset = FinitePoset::parse_cover_list(text).map_err(value_error)?;
    Ok(lattice::classify(&poset).into())
}

/// Cover relation of `[bottom, top]` as (lower, upper) one-line pairs.
#[pyfunction]
#[pyo3(signature = (bottom, top, order = "bruhat"))]
fn interval_covers(
    bottom: &Bound<'_, PyAny>,
    top: &Bound<'_, PyAny>,
    order: &str,
) -> PyResult<Vec<(String, String)>> {
    let poset = order::extract_interval(&spec(bottom, top, order)?);
    Ok(poset
        .cover_edges()
        .into_iter()
        .map(|(a, b)| (poset.label(a).to_string(), poset.label(b).to_string()))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (bottom, top, order = "bruhat", highlight_support = false))]
fn hasse(
    bottom: &Bound<'_, PyAny>,
    top: &Bound<'_, PyAny>,
    order: &str,
    highlight_support: bool,
) -> PyResult<String> {
    Ok(permlattice::emit_hasse(
        &spec(bottom, top, order)?,
        highlight_support,
    ))
}

#[pyfunction]
fn fib(i: usize) -> BigUint {
    census::fib(i)
}

#[pyfunction]
fn catalan(i: usize) -> BigUint {
    census::catalan(i)
}

/// Census rows as JSON (same schema as the command-line `--format json`).
#[pyfunction]
#[pyo3(signature = (table, n_min, n_max, mode = "predicate"))]
fn census_json(table: &str, n_min: usize, n_max: usize, mode: &str) -> PyResult<String> {
    let table: Table = table.parse().map_err(PyValueError::new_err)?;
    let mode: Mode = mode.parse().map_err(PyValueError::new_err)?;
    let report = Census::new()
        .verify(n_min..=n_max, mode, &[table])
        .map_err(value_error)?;
    serde_json::to_string(&report.rows).map_err(value_error)
}

/// Number of `w` with Bruhat `[σ_k, w]` boolean, by constructive generation.
#[pyfunction]
fn count_bruhat_atom_boolean(n: usize, k: usize) -> PyResult<BigUint> {
    Ok(Census::new()
        .count_bruhat_atom_boolean(n, k)
        .map_err(value_error)?
        .counted)
}

#[pyfunction]
#[pyo3(signature = (n, order = "bruhat"))]
fn count_boolean_over_support(n: usize, order: &str) -> PyResult<BigUint> {
    let row = Census::new()
        .count_boolean_over_support(n, to_order(order)?, Method::Predicate)
        .map_err(value_error)?;
    Ok(row.counted)
}

#[pymodule]
pub fn permlattice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyLatticeReport>()?;
    m.add_class::<PyTheoremReport>()?;
    m.add_function(wrap_pyfunction!(leq, m)?)?;
    m.add_function(wrap_pyfunction!(classify_interval, m)?)?;
    m.add_function(wrap_pyfunction!(classify_poi, m)?)?;
    m.add_function(wrap_pyfunction!(classify_cover_list, m)?)?;
    m.add_function(wrap_pyfunction!(interval_covers, m)?)?;
    m.add_function(wrap_pyfunction!(hasse, m)?)?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(census_json, m)?)?;
    m.add_function(wrap_pyfunction!(count_bruhat_atom_boolean, m)?)?;
    m.add_function(wrap_pyfunction!(count_boolean_over_support, m)?)?;
    Ok(())
}
