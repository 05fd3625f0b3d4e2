//! Python bindings: `Polynomial`, `RingSpec`, the sequence generators and
//! the two structural checkers.

use num_bigint::BigInt;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use recring::chains;
use recring::groebner;
use recring::poly::text;
use recring::sequences::{self, SequenceId};
use recring::{CoefficientRing, Monomial, Polynomial, RingFamily, RingSpec};

fn err(e: recring::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coefficient_ring(modulus: Option<BigInt>) -> PyResult<CoefficientRing> {
    match modulus {
        Some(m) => CoefficientRing::modulo(m).map_err(err),
        None => Ok(CoefficientRing::Integers),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn seq_id(name: &str) -> PyResult<SequenceId> {
    name.parse().map_err(err)
}

/// A sparse polynomial over Z or Z/mZ.
#[pyclass(name = "Polynomial", module = "recring_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial {
    inner: Polynomial,
}

impl PyPolynomial {
    fn combine(&self, other: &Bound<'_, PyAny>, op: fn(&Polynomial, &Polynomial) -> recring::Result<Polynomial>) -> PyResult<Self> {
        let rhs = self.coerce(other)?;
        Ok(PyPolynomial { inner: op(&self.inner, &rhs).map_err(err)? })
    }

    /// Accepts another `Polynomial` or a Python int.
    fn coerce(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        if let Ok(p) = other.cast::<PyPolynomial>() {
            return Ok(p.get().inner.clone());
        }
        if let Ok(c) = other.extract::<BigInt>() {
            return Ok(Polynomial::constant(self.inner.ring().clone(), c));
        }
        Err(PyTypeError::new_err("expected Polynomial or int"))
    }
}

#[pymethods]
impl PyPolynomial {
    /// Parses `text` (e.g. "1 + 2*x1*x2 - x3") over Z, or over Z/mZ when
    /// `modulus` is given.
    #[new]
    #[pyo3(signature = (text, modulus=None))]
    fn new(text: &str, modulus: Option<BigInt>) -> PyResult<Self> {
        let ring = coefficient_ring(modulus)?;
        Ok(PyPolynomial { inner: text::parse(text, ring).map_err(err)? })
    }

    /// Builds a polynomial from `[(coefficient, [(var, exp), ...]), ...]`.
    #[staticmethod]
    #[pyo3(signature = (terms, modulus=None))]
    fn from_terms(terms: Vec<(BigInt, Vec<(u32, u32)>)>, modulus: Option<BigInt>) -> PyResult<Self> {
        let ring = coefficient_ring(modulus)?;
        let terms = terms
            .into_iter()
            .map(|(c, e)| Ok((c, Monomial::from_pairs(e).map_err(err)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyPolynomial { inner: Polynomial::from_terms(ring, terms) })
    }

    #[staticmethod]
    #[pyo3(signature = (doc, modulus=None))]
    fn from_json(doc: &str, modulus: Option<BigInt>) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(doc).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let ring = coefficient_ring(modulus)?;
        Ok(PyPolynomial { inner: text::from_json(&v, ring).map_err(err)? })
    }

    fn to_json(&self) -> String {
        text::to_json(&self.inner).to_string()
    }

    /// Terms in dlex-descending order.
    fn terms(&self) -> Vec<(BigInt, Vec<(u32, u32)>)> {
        self.inner.terms().iter().map(|(c, m)| (c.clone(), m.pairs().to_vec())).collect()
    }

    #[getter]
    fn modulus(&self) -> Option<BigInt> {
        self.inner.ring().modulus().cloned()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn evaluate_all_ones(&self) -> BigInt {
        self.inner.evaluate_all_ones()
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.combine(other, Polynomial::add)
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.combine(other, Polynomial::add)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.combine(other, Polynomial::sub)
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let lhs = self.coerce(other)?;
        Ok(PyPolynomial { inner: lhs.sub(&self.inner).map_err(err)? })
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.combine(other, Polynomial::mul)
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.combine(other, Polynomial::mul)
    }

    fn __neg__(&self) -> Self {
        PyPolynomial { inner: self.inner.neg() }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        match self.inner.ring().modulus() {
            Some(m) => format!("Polynomial({:?}, modulus={m})", self.inner.to_string()),
            None => format!("Polynomial({:?})", self.inner.to_string()),
        }
    }
}

/// A quotient ring `R[x1..xn] / <x_i^d - P_i>`.
#[pyclass(name = "RingSpec", module = "recring_py", frozen)]
pub struct PyRingSpec {
    inner: RingSpec,
}

#[pymethods]
impl PyRingSpec {
    /// One of the built-in families: "K", "Kprime", or "Kmod" (needs `m`).
    #[staticmethod]
    #[pyo3(signature = (name, num_vars, m=None))]
    fn family(name: &str, num_vars: u32, m: Option<BigInt>) -> PyResult<Self> {
        let family = match (name.to_ascii_lowercase().as_str(), m) {
            ("k", None) => RingFamily::K,
            ("kprime", None) => RingFamily::KPrime,
            ("kmod", Some(m)) => RingFamily::KMod(m),
            ("kmod", None) => return Err(PyValueError::new_err("family Kmod needs a modulus m")),
            (_, Some(_)) => return Err(PyValueError::new_err("m is only valid with family Kmod")),
            (other, None) => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
        };
        Ok(PyRingSpec { inner: recring::make_ring(&family, num_vars).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(doc: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(doc).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyRingSpec { inner: RingSpec::from_json(&v).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    #[getter]
    fn num_vars(&self) -> u32 {
        self.inner.num_vars()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn modulus(&self) -> Option<BigInt> {
        self.inner.coeff_ring().modulus().cloned()
    }

    fn reducers(&self) -> Vec<PyPolynomial> {
        self.inner.reducers().iter().map(|p| PyPolynomial { inner: p.clone() }).collect()
    }

    /// `x_i^d - P_i` for i = 1..n.
    fn generators(&self) -> Vec<PyPolynomial> {
        self.inner.ideal_generators().into_iter().map(|p| PyPolynomial { inner: p }).collect()
    }

    /// Parses `text` over this ring's coefficients.
    fn poly(&self, text: &str) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: text::parse(text, self.inner.coeff_ring().clone()).map_err(err)? })
    }

    fn reduce(&self, py: Python<'_>, p: PyRef<'_, PyPolynomial>) -> PyResult<PyPolynomial> {
        let p = p.inner.clone();
        let r = py.detach(|| self.inner.reduce(&p)).map_err(err)?;
        Ok(PyPolynomial { inner: r })
    }

    fn mul(&self, py: Python<'_>, a: PyRef<'_, PyPolynomial>, b: PyRef<'_, PyPolynomial>) -> PyResult<PyPolynomial> {
        let (a, b) = (a.inner.clone(), b.inner.clone());
        let r = py.detach(|| self.inner.mul(&a, &b)).map_err(err)?;
        Ok(PyPolynomial { inner: r })
    }

    fn pow(&self, py: Python<'_>, base: PyRef<'_, PyPolynomial>, n: u64) -> PyResult<PyPolynomial> {
        let base = base.inner.clone();
        let r = py.detach(|| self.inner.pow(&base, n)).map_err(err)?;
        Ok(PyPolynomial { inner: r })
    }

    fn is_groebner<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        is_groebner(py, self.generators())
    }

    fn regular_chain<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        is_regular_chain(py, self.generators(), self.inner.num_vars())
    }

    fn __repr__(&self) -> String {
        format!(
            "RingSpec(n={}, d={}, coeff={})",
            self.inner.num_vars(),
            self.inner.degree(),
            self.inner.coeff_ring()
        )
    }
}

fn unwrap_all(gens: Vec<PyPolynomial>) -> Vec<Polynomial> {
    gens.into_iter().map(|g| g.inner).collect()
}

fn extract_all(gens: &Bound<'_, PyList>) -> PyResult<Vec<PyPolynomial>> {
    gens.iter()
        .map(|g| Ok(g.cast::<PyPolynomial>()?.get().clone()))
        .collect()
}

/// Buchberger check; returns a dict with `is_groebner`, `failing_pair` and `pairs_checked`.
#[pyfunction]
#[pyo3(name = "is_groebner")]
fn py_is_groebner<'py>(py: Python<'py>, generators: &Bound<'py, PyList>) -> PyResult<Bound<'py, PyAny>> {
    is_groebner(py, extract_all(generators)?)
}

fn is_groebner<'py>(py: Python<'py>, generators: Vec<PyPolynomial>) -> PyResult<Bound<'py, PyAny>> {
    let gens = unwrap_all(generators);
    let report = py.detach(|| groebner::is_groebner(&gens)).map_err(err)?;
    json_to_py(py, &report.to_json())
}

/// Regular-chain check over `x1..x{num_vars}`; returns the report as a dict.
#[pyfunction]
#[pyo3(name = "is_regular_chain")]
fn py_is_regular_chain<'py>(
    py: Python<'py>,
    generators: &Bound<'py, PyList>,
    num_vars: u32,
) -> PyResult<Bound<'py, PyAny>> {
    is_regular_chain(py, extract_all(generators)?, num_vars)
}

fn is_regular_chain<'py>(py: Python<'py>, generators: Vec<PyPolynomial>, num_vars: u32) -> PyResult<Bound<'py, PyAny>> {
    let gens = unwrap_all(generators);
    let report = py.detach(|| chains::is_regular_chain(&gens, num_vars)).map_err(err)?;
    json_to_py(py, &report.to_json())
}

#[pyfunction]
fn required_vars(n: u64) -> PyResult<u32> {
    recring::required_vars(n).map_err(err)
}

/// `C(2n, n)`; `method` is "ring" or "oracle".
#[pyfunction]
#[pyo3(signature = (n, method="ring"))]
fn central_binomial(py: Python<'_>, n: u64, method: &str) -> PyResult<BigInt> {
    match method {
        "ring" => Ok(py.detach(|| sequences::central_binomial_ring(n))),
        "oracle" => Ok(sequences::central_binomial_oracle(n)),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// Gould's sequence; `method` is "mod2", "signed" or "oracle".
#[pyfunction]
#[pyo3(signature = (n, method="mod2"))]
fn gould(py: Python<'_>, n: u64, method: &str) -> PyResult<BigInt> {
    match method {
        "mod2" | "ring" => Ok(py.detach(|| sequences::gould_mod2_ring(n))),
        "signed" => Ok(py.detach(|| sequences::gould_signed_ring(n))),
        "oracle" => Ok(sequences::gould_oracle(n)),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// Terms `start..=stop` of "cbc" or "gould", computed through the rings in parallel.
#[pyfunction]
fn sequence(py: Python<'_>, seq: &str, start: u64, stop: u64) -> PyResult<Vec<BigInt>> {
    if start > stop {
        return Err(PyValueError::new_err("start must not exceed stop"));
    }
    let f = match seq_id(seq)? {
        SequenceId::CentralBinomial => sequences::central_binomial_ring,
        SequenceId::Gould => sequences::gould_mod2_ring,
    };
    Ok(py.detach(|| sequences::generate_range(start, stop, f)))
}

/// Term `n` of the `t`-th binomial transform of "cbc" or "gould";
/// `method` is "ring" or "direct".
#[pyfunction]
#[pyo3(signature = (seq, t, n, method="ring"))]
fn transform(py: Python<'_>, seq: &str, t: i64, n: u64, method: &str) -> PyResult<BigInt> {
    let seq = seq_id(seq)?;
    match method {
        "ring" => Ok(py.detach(|| sequences::transform_ring(seq, t, n))),
        "direct" => {
            let terms: Vec<BigInt> = (0..=n).map(|k| sequences::oracle_term(seq, k)).collect();
            sequences::binomial_transform_direct(&terms, t, n as usize).map_err(err)
        }
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

/// The `t`-th binomial transform of a finite prefix.
#[pyfunction]
fn binomial_transform(a: Vec<BigInt>, t: i64) -> PyResult<Vec<BigInt>> {
    if a.is_empty() {
        return Ok(a);
    }
    let n = a.len() - 1;
    sequences::binomial_transform_prefix(&a, t, n).map_err(err)
}

#[pymodule]
pub fn recring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyRingSpec>()?;
    m.add_function(wrap_pyfunction!(required_vars, m)?)?;
    m.add_function(wrap_pyfunction!(central_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(gould, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(transform, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_transform, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_groebner, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_regular_chain, m)?)?;
    Ok(())
}
