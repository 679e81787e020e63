//! Python bindings for the irreducible-sequence library.
//!
//! Exposes the polynomial type plus the main operations: type
//! classification, the degree-doubling transform, reciprocal-pair
//! splitting, sequence generation (as JSON), the exhaustive theorem
//! suites and graph export. See `python/smoke_test.py` at the repo root
//! for a worked tour.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qseq::gf2poly::BitPoly as CoreBitPoly;
use qseq::irreducibility::is_irreducible_rabin;
use qseq::qtransform;
use qseq::recsplit;
use qseq::seqgen::sequence_stream_with_options;
use qseq::thetagraph::build_graph;
use qseq::verify::run_all;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A binary polynomial, constructed from either text ("x^3+x^2+1") or
/// hex ("0xd") form.
#[pyclass(name = "BitPoly", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyBitPoly {
    inner: CoreBitPoly,
}

#[pymethods]
impl PyBitPoly {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        let inner = s.parse::<CoreBitPoly>().map_err(value_error)?;
        Ok(PyBitPoly { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BitPoly(\"{}\")", self.inner.to_hex_string())
    }

    /// The hex encoding, bit i = coefficient of x^i.
    fn hex(&self) -> String {
        self.inner.to_hex_string()
    }

    /// Degree, or None for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyBitPoly {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyBitPoly {
            inner: self.inner.mul(&other.inner),
        }
    }

    /// The coefficient-reversed polynomial.
    fn reciprocal(&self) -> PyResult<Self> {
        let inner = self.inner.reciprocal().map_err(value_error)?;
        Ok(PyBitPoly { inner })
    }

    fn is_self_reciprocal(&self) -> bool {
        self.inner.is_self_reciprocal()
    }

    /// Rabin irreducibility test.
    fn is_irreducible(&self) -> PyResult<bool> {
        Ok(is_irreducible_rabin(&self.inner)
            .map_err(value_error)?
            .irreducible)
    }
}

/// The (letter, n) classification with the degree profile n = 2^l * m.
#[pyclass(name = "PolyType", frozen, get_all)]
struct PyPolyType {
    letter: String,
    n: usize,
    l: u32,
    m: usize,
}

#[pymethods]
impl PyPolyType {
    fn __repr__(&self) -> String {
        format!(
            "PolyType(letter=\"{}\", n={}, l={}, m={})",
            self.letter, self.n, self.l, self.m
        )
    }
}

/// Classify a polynomial by its coefficients of x^(n-1) and x.
#[pyfunction]
fn classify(poly: &PyBitPoly) -> PyResult<PyPolyType> {
    let t = qtransform::classify(&poly.inner).map_err(value_error)?;
    Ok(PyPolyType {
        letter: t.letter.to_string(),
        n: t.n,
        l: t.l,
        m: t.m,
    })
}

/// The degree-doubling transform x^n * f(x + 1/x).
#[pyfunction]
fn q_transform(poly: &PyBitPoly) -> PyResult<PyBitPoly> {
    let inner = qtransform::q_transform(&poly.inner).map_err(value_error)?;
    Ok(PyBitPoly { inner })
}

/// Split a reducible degree-2n transform into its canonical reciprocal
/// pair of irreducible degree-n factors.
#[pyfunction]
#[pyo3(signature = (g, n, rng_seed = 0))]
fn split_reciprocal_pair(
    g: &PyBitPoly,
    n: usize,
    rng_seed: u64,
) -> PyResult<(PyBitPoly, PyBitPoly)> {
    let pair = recsplit::split_reciprocal_pair(&g.inner, n, rng_seed).map_err(value_error)?;
    Ok((PyBitPoly { inner: pair.g1 }, PyBitPoly { inner: pair.g2 }))
}

/// Generate `terms` terms of the irreducible sequence from a seed and
/// return the record as a JSON string (fields: terms, s, seed,
/// attempts).
#[pyfunction]
#[pyo3(signature = (poly, terms, rng_seed = 0, verify = true))]
fn sequence_json(poly: &str, terms: usize, rng_seed: u64, verify: bool) -> PyResult<String> {
    if terms == 0 {
        return Err(PyValueError::new_err("terms must be at least 1"));
    }
    let f0 = poly.parse::<CoreBitPoly>().map_err(value_error)?;
    let record = sequence_stream_with_options(&f0, terms, rng_seed, verify).map_err(value_error)?;
    Ok(record.to_json_string())
}

/// Run the exhaustive theorem suites up to a degree; returns a list of
/// (name, passed, checked, counterexample_count) tuples.
#[pyfunction]
#[pyo3(signature = (max_degree, rng_seed = 0))]
fn verify_suites(max_degree: usize, rng_seed: u64) -> Vec<(String, bool, usize, usize)> {
    run_all(max_degree, rng_seed)
        .into_iter()
        .map(|r| {
            (
                r.name.to_string(),
                r.passed(),
                r.checked,
                r.counterexamples.len(),
            )
        })
        .collect()
}

fn parse_modulus(modulus: Option<&str>) -> PyResult<Option<CoreBitPoly>> {
    modulus
        .map(|s| s.parse::<CoreBitPoly>().map_err(value_error))
        .transpose()
}

/// DOT export of the functional graph of alpha -> alpha + 1/alpha over
/// the degree-n field.
#[pyfunction]
#[pyo3(signature = (n, modulus = None))]
fn theta_graph_dot(n: usize, modulus: Option<&str>) -> PyResult<String> {
    let graph = build_graph(n, parse_modulus(modulus)?).map_err(value_error)?;
    Ok(graph.to_dot())
}

/// JSON export of the same graph.
#[pyfunction]
#[pyo3(signature = (n, modulus = None))]
fn theta_graph_json(n: usize, modulus: Option<&str>) -> PyResult<String> {
    let graph = build_graph(n, parse_modulus(modulus)?).map_err(value_error)?;
    Ok(graph.to_json_string())
}

#[pymodule]
fn qseq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBitPoly>()?;
    m.add_class::<PyPolyType>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(q_transform, m)?)?;
    m.add_function(wrap_pyfunction!(split_reciprocal_pair, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suites, m)?)?;
    m.add_function(wrap_pyfunction!(theta_graph_dot, m)?)?;
    m.add_function(wrap_pyfunction!(theta_graph_json, m)?)?;
    Ok(())
}
