//! Python bindings for the path monoid library: the `pq_py` extension module
//! exposes paths, interval systems, and the exact counters.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pq::enumeration;
use pq::idempotent;
use pq::quantale;

fn domain_err(e: pq::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A lattice path from (0,0) to (width, height), written as a word over
/// `x` (East) and `y` (North).
#[pyclass(name = "Path", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPath {
    inner: pq::Path,
}

#[pymethods]
impl PyPath {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        Ok(PyPath {
            inner: pq::Path::parse(word).map_err(domain_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.word()
    }

    fn __repr__(&self) -> String {
        format!("Path({:?})", self.inner.word())
    }

    #[getter]
    fn word(&self) -> String {
        self.inner.word()
    }

    #[getter]
    fn width(&self) -> usize {
        self.inner.width()
    }

    #[getter]
    fn height(&self) -> usize {
        self.inner.height()
    }

    /// Product through the shared middle dimension.
    fn product(&self, other: &PyPath) -> PyResult<PyPath> {
        Ok(PyPath {
            inner: quantale::product(&self.inner, &other.inner).map_err(domain_err)?,
        })
    }

    /// Dual sum `(other* (x) self*)*`.
    fn oplus(&self, other: &PyPath) -> PyResult<PyPath> {
        Ok(PyPath {
            inner: quantale::oplus(&self.inner, &other.inner).map_err(domain_err)?,
        })
    }

    /// Exchange the two letters.
    fn star(&self) -> PyPath {
        PyPath {
            inner: self.inner.swap_letters(),
        }
    }

    fn reverse(&self) -> PyPath {
        PyPath {
            inner: self.inner.reversed(),
        }
    }

    /// Reflection of a square path along the anti-diagonal.
    fn reflect(&self) -> PyResult<PyPath> {
        Ok(PyPath {
            inner: self.inner.reflect_antidiagonal().map_err(domain_err)?,
        })
    }

    fn join(&self, other: &PyPath) -> PyResult<PyPath> {
        Ok(PyPath {
            inner: quantale::join(&self.inner, &other.inner).map_err(domain_err)?,
        })
    }

    fn meet(&self, other: &PyPath) -> PyResult<PyPath> {
        Ok(PyPath {
            inner: quantale::meet(&self.inner, &other.inner).map_err(domain_err)?,
        })
    }

    /// Dominance order: does `other` stay above `self`?
    fn leq(&self, other: &PyPath) -> PyResult<bool> {
        quantale::leq(&self.inner, &other.inner).map_err(domain_err)
    }

    fn descents(&self) -> usize {
        self.inner.descent_count()
    }

    /// All turns as `(kind, a, b)` with kind `"NE"` or `"EN"`.
    fn turns(&self) -> Vec<(String, usize, usize)> {
        self.inner
            .turns()
            .into_iter()
            .map(|t| {
                let kind = match t.kind {
                    pq::TurnKind::NorthEast => "NE",
                    pq::TurnKind::EastNorth => "EN",
                };
                (kind.to_string(), t.point.0, t.point.1)
            })
            .collect()
    }

    fn is_idempotent(&self) -> PyResult<bool> {
        idempotent::is_idempotent_path(&self.inner).map_err(domain_err)
    }

    fn is_upper_zigzag(&self) -> PyResult<bool> {
        idempotent::is_upper_zigzag(&self.inner).map_err(domain_err)
    }

    fn is_nilpotent(&self) -> PyResult<bool> {
        idempotent::is_nilpotent_path(&self.inner).map_err(domain_err)
    }

    /// The join-continuous map as `(values, codomain)`.
    fn to_map(&self) -> (Vec<usize>, usize) {
        let f = pq::JoinContMap::from_path(&self.inner);
        (f.values().to_vec(), f.codomain_end())
    }

    /// Epi-mono factorization as `(left, right, descents)`.
    fn factorize(&self) -> (PyPath, PyPath, usize) {
        let f = quantale::factorize(&self.inner);
        (
            PyPath { inner: f.left },
            PyPath { inner: f.right },
            f.descents,
        )
    }

    /// The interval system of an idempotent path.
    fn emmentaler(&self) -> PyResult<PyEmmentaler> {
        Ok(PyEmmentaler {
            inner: pq::Emmentaler::from_path(&self.inner).map_err(domain_err)?,
        })
    }

    /// ASCII drawing on a dot grid.
    fn render(&self) -> String {
        self.inner.render_ascii()
    }
}

/// An alternating interval system on the chain {0..n}; the canonical form of
/// an idempotent path.
#[pyclass(name = "Emmentaler", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyEmmentaler {
    inner: pq::Emmentaler,
}

#[pymethods]
impl PyEmmentaler {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyEmmentaler {
            inner: pq::Emmentaler::parse(text).map_err(domain_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Emmentaler({:?})", self.inner.to_string())
    }

    #[getter]
    fn intervals(&self) -> Vec<(usize, usize)> {
        self.inner.intervals().to_vec()
    }

    #[getter]
    fn chain_end(&self) -> usize {
        self.inner.chain_end()
    }

    /// The idempotent path of the system.
    fn path(&self) -> PyPath {
        PyPath {
            inner: self.inner.to_path(),
        }
    }

    /// The idempotent map and its right adjoint, as value vectors.
    fn maps(&self) -> (Vec<usize>, Vec<usize>) {
        let (f, g) = self.inner.to_maps();
        (f.values().to_vec(), g.values().to_vec())
    }

    /// The three-letter word over `1`, `m`, `0`.
    fn zigzag(&self) -> String {
        self.inner.encode().to_string()
    }
}

/// The path of a join-continuous map given as a value vector and codomain.
#[pyfunction]
fn path_from_map(values: Vec<usize>, codomain: usize) -> PyResult<PyPath> {
    Ok(PyPath {
        inner: pq::JoinContMap::new(values, codomain)
            .map_err(domain_err)?
            .to_path(),
    })
}

/// Decode a three-letter word (`1`, `m`, `0`) into its interval system.
#[pyfunction]
fn emmentaler_from_zigzag(word: &str) -> PyResult<PyEmmentaler> {
    Ok(PyEmmentaler {
        inner: pq::ZigzagWord::parse(word).map_err(domain_err)?.decode(),
    })
}

#[pyfunction]
fn fibonacci(k: u64) -> BigUint {
    enumeration::fibonacci(k)
}

#[pyfunction]
fn catalan(k: u64) -> BigUint {
    enumeration::catalan(k)
}

#[pyfunction]
fn binomial(n: u64, k: u64) -> BigUint {
    enumeration::binomial(n, k)
}

/// Number of idempotent paths of P(n,n): the odd Fibonacci number f(2n+1).
#[pyfunction]
fn count_idempotents(n: usize) -> BigUint {
    enumeration::count_idempotents(n, 0).formula
}

/// Number of idempotent monotone endomaps of {1..n}: f(2n).
#[pyfunction]
fn count_monotone_idempotents(n: usize) -> BigUint {
    enumeration::count_monotone_idempotents(n, 0).formula
}

/// Number of idempotents with top value k: f(2k), or 1 for k = 0.
#[pyfunction]
fn count_idempotents_by_top(n: usize, k: usize) -> PyResult<BigUint> {
    Ok(enumeration::count_idempotents_by_top(n, k, 0)
        .map_err(domain_err)?
        .formula)
}

/// Number of nilpotent (Dyck) paths of P(n,n): the Catalan number.
#[pyfunction]
fn count_nilpotents(n: usize) -> BigUint {
    enumeration::count_nilpotents(n, 0).formula
}

/// Number of pairs multiplying to `w` through the given middle dimension.
#[pyfunction]
fn count_preimages(w: &PyPath, middle: usize) -> BigUint {
    quantale::preimage_count(&w.inner, middle)
}

/// Floating-point closed form for the idempotent count.
#[pyfunction]
fn psi_closed_form(n: u32) -> f64 {
    enumeration::psi_closed_form(n)
}

/// All of P(width, height) in lexicographic word order.
#[pyfunction]
fn enumerate_paths(width: usize, height: usize) -> Vec<PyPath> {
    enumeration::paths(width, height)
        .map(|p| PyPath { inner: p })
        .collect()
}

/// All idempotent paths of P(n,n), generated from their interval systems.
#[pyfunction]
fn enumerate_idempotents(n: usize) -> Vec<PyPath> {
    enumeration::idempotent_paths(n)
        .map(|p| PyPath { inner: p })
        .collect()
}

/// Run the exhaustive oracle suite; returns `(name, passed)` pairs.
#[pyfunction]
#[pyo3(signature = (n = 3, oracle_cap = 2))]
fn verify_suite(n: usize, oracle_cap: usize) -> Vec<(String, bool)> {
    pq::verify::run_all(&pq::verify::VerifyConfig {
        sweep_cap: n,
        product_cap: oracle_cap,
    })
    .into_iter()
    .map(|c| (c.name.to_string(), c.pass))
    .collect()
}

#[pymodule]
fn pq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPath>()?;
    m.add_class::<PyEmmentaler>()?;
    m.add_function(wrap_pyfunction!(path_from_map, m)?)?;
    m.add_function(wrap_pyfunction!(emmentaler_from_zigzag, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(count_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(count_monotone_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(count_idempotents_by_top, m)?)?;
    m.add_function(wrap_pyfunction!(count_nilpotents, m)?)?;
    m.add_function(wrap_pyfunction!(count_preimages, m)?)?;
    m.add_function(wrap_pyfunction!(psi_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_idempotents, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
