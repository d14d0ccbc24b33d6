//! Python bindings: the main algebra types and the adjointness analysis.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use ncspec::algebra::{self, Algebra, AlgebraHom};
use ncspec::correspondence::analyze_hom;
use ncspec::exactlin::{FieldSpec, Scalar, Subspace};
use ncspec::harness;
use ncspec::ideals;
use ncspec::io;
use ncspec::spectrum;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(name: &str) -> PyResult<FieldSpec> {
    FieldSpec::parse_name(name).map_err(err)
}

fn parse_coords(a: &Algebra, coords: Vec<String>) -> PyResult<Vec<Scalar>> {
    if coords.len() != a.dim() {
        return Err(PyValueError::new_err(format!(
            "expected {} coordinates, got {}",
            a.dim(),
            coords.len()
        )));
    }
    coords
        .into_iter()
        .map(|s| Scalar::parse(a.field(), &s).map_err(err))
        .collect()
}

fn coords_out(coords: &[Scalar]) -> Vec<String> {
    coords.iter().map(|s| s.to_string()).collect()
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<PyObject> {
    Ok(match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().unbind().into(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.unbind().into()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.unbind().into()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.unbind().into(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.unbind().into()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.unbind().into()
        }
    })
}

/// A finite-dimensional unital associative algebra over Q or F_p.
#[pyclass(name = "Algebra")]
#[derive(Clone)]
struct PyAlgebra {
    inner: Algebra,
}

#[pymethods]
impl PyAlgebra {
    /// Full matrix algebra M_n(k).
    #[staticmethod]
    fn matrix(field: &str, n: usize) -> PyResult<Self> {
        Ok(PyAlgebra { inner: algebra::matrix_algebra(parse_field(field)?, n) })
    }

    /// Upper-triangular algebra T_n(k).
    #[staticmethod]
    fn upper_triangular(field: &str, n: usize) -> PyResult<Self> {
        Ok(PyAlgebra { inner: algebra::upper_triangular_algebra(parse_field(field)?, n) })
    }

    /// Group algebra k[G] from a Cayley table.
    #[staticmethod]
    fn group(field: &str, table: Vec<Vec<usize>>) -> PyResult<Self> {
        algebra::group_algebra(parse_field(field)?, &table)
            .map(|inner| PyAlgebra { inner })
            .map_err(err)
    }

    /// Direct product A x B.
    #[staticmethod]
    fn product(a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Self> {
        algebra::direct_product(&a.inner, &b.inner)
            .map(|inner| PyAlgebra { inner })
            .map_err(err)
    }

    /// Parse the JSON algebra file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(err)?;
        io::algebra_from_json(&v).map(|inner| PyAlgebra { inner }).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&io::algebra_to_json(&self.inner)).expect("serializable")
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// Product of two coordinate vectors (scalar strings).
    fn multiply(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let x = parse_coords(&self.inner, x)?;
        let y = parse_coords(&self.inner, y)?;
        Ok(coords_out(&self.inner.mul_coords(&x, &y)))
    }

    /// Canonical basis of the radical, as coordinate rows.
    fn radical(&self) -> Vec<Vec<String>> {
        ideals::jacobson_radical(&self.inner)
            .carrier()
            .basis_rows()
            .iter()
            .map(|r| coords_out(r))
            .collect()
    }

    /// The prime spectrum: a list of dicts with basis, quotient_dim, and
    /// goldie_rank per prime.
    fn spec(&self, py: Python<'_>) -> PyResult<PyObject> {
        let s = spectrum::spec(&self.inner).map_err(err)?;
        let list = PyList::empty(py);
        for p in s.primes() {
            let d = PyDict::new(py);
            let basis: Vec<Vec<String>> = p
                .ideal()
                .carrier()
                .basis_rows()
                .iter()
                .map(|r| coords_out(r))
                .collect();
            d.set_item("basis", basis)?;
            d.set_item("quotient_dim", p.quotient_dim())?;
            match spectrum::goldie_rank(&self.inner, p) {
                Ok((rank, cert)) => {
                    d.set_item("goldie_rank", rank)?;
                    d.set_item("rank_certificate", cert)?;
                }
                Err(_) => d.set_item("goldie_rank", py.None())?,
            }
            list.append(d)?;
        }
        Ok(list.unbind().into())
    }

    /// Smallest unital subalgebra containing the generators; returns the
    /// subalgebra and the inclusion.
    fn subalgebra(&self, generators: Vec<Vec<String>>) -> PyResult<(PyAlgebra, PyHom)> {
        let gens: PyResult<Vec<_>> = generators
            .into_iter()
            .map(|g| parse_coords(&self.inner, g).map(|c| self.inner.element(c)))
            .collect();
        let (sub, inc) = algebra::subalgebra_from_generators(&self.inner, &gens?).map_err(err)?;
        Ok((PyAlgebra { inner: sub }, PyHom { inner: inc }))
    }

    /// Quotient by the two-sided ideal generated by the given elements;
    /// returns the quotient and the projection.
    fn quotient_by_generated_ideal(
        &self,
        generators: Vec<Vec<String>>,
    ) -> PyResult<(PyAlgebra, PyHom)> {
        let gens: PyResult<Vec<_>> = generators
            .into_iter()
            .map(|g| parse_coords(&self.inner, g).map(|c| self.inner.element(c)))
            .collect();
        let ideal = ideals::two_sided_ideal_generated(&self.inner, &gens?);
        let (q, proj) = algebra::quotient_algebra(&self.inner, &ideal).map_err(err)?;
        Ok((PyAlgebra { inner: q }, PyHom { inner: proj }))
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim {} over {})", self.inner.dim(), self.inner.field())
    }
}

/// A unital algebra homomorphism.
#[pyclass(name = "Hom")]
#[derive(Clone)]
struct PyHom {
    inner: AlgebraHom,
}

#[pymethods]
impl PyHom {
    #[staticmethod]
    fn identity(a: &PyAlgebra) -> Self {
        PyHom { inner: AlgebraHom::identity(&a.inner) }
    }

    /// Inclusion of the subalgebra spanned by the given coordinate rows
    /// (must be multiplicatively closed and contain 1).
    #[staticmethod]
    fn inclusion_of_span(ambient: &PyAlgebra, rows: Vec<Vec<String>>) -> PyResult<(PyAlgebra, PyHom)> {
        let rows: PyResult<Vec<_>> = rows
            .into_iter()
            .map(|r| parse_coords(&ambient.inner, r))
            .collect();
        let sub = Subspace::from_rows(ambient.inner.field(), ambient.inner.dim(), rows?);
        let (r, inc) = algebra::subalgebra_on_subspace(&ambient.inner, &sub).map_err(err)?;
        Ok((PyAlgebra { inner: r }, PyHom { inner: inc }))
    }

    #[getter]
    fn source(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.source().clone() }
    }

    #[getter]
    fn target(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.target().clone() }
    }

    fn apply(&self, coords: Vec<String>) -> PyResult<Vec<String>> {
        let x = parse_coords(self.inner.source(), coords)?;
        Ok(coords_out(&self.inner.apply_coords(&x)))
    }

    /// The full adjointness analysis as a dict: flags, per-prime
    /// exponents, correspondence table, witnesses, consistency verdict.
    fn analyze(&self, py: Python<'_>) -> PyResult<PyObject> {
        let analysis = analyze_hom(&self.inner).map_err(err)?;
        let v = serde_json::to_value(&analysis).map_err(err)?;
        json_to_py(py, &v)
    }

    fn __repr__(&self) -> String {
        format!(
            "Hom({}-dim -> {}-dim over {})",
            self.inner.source().dim(),
            self.inner.target().dim(),
            self.inner.source().field()
        )
    }
}

/// Load a shipped example by name ("ex1", "ex2", "ex3" or their aliases);
/// returns (name, description, Hom).
#[pyfunction]
fn example_fixture(name: &str) -> PyResult<(String, String, PyHom)> {
    let fx = harness::fixture(name).map_err(err)?;
    Ok((
        fx.name.to_string(),
        fx.description.to_string(),
        PyHom { inner: fx.hom.clone() },
    ))
}

/// Generate the deterministic fuzz instance for a seed and run the full
/// oracle cross-check; returns a dict.
#[pyfunction]
fn fuzz_instance(py: Python<'_>, seed: u64) -> PyResult<PyObject> {
    let spec = harness::InstanceSpec::from_seed(seed);
    let (r, s, f) = harness::generate_instance(&spec).map_err(err)?;
    let report = harness::oracle_cross_check(&f).map_err(err)?;
    let v = serde_json::json!({
        "seed": seed,
        "kind": spec.kind.name(),
        "field": spec.field.to_string(),
        "dims": [r.dim(), s.dim()],
        "flags": report.flags,
        "consistent": report.consistent,
        "failures": report.failures,
    });
    json_to_py(py, &v)
}

#[pymodule]
fn ncspec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyHom>()?;
    m.add_function(wrap_pyfunction!(example_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz_instance, m)?)?;
    Ok(())
}
