//! Python bindings for gcross.
//!
//! Elements cross the boundary as lists of scalar strings (`"1/2"`);
//! reports and verdicts come back as plain dicts.

use gcross::algebra::StructureConstantAlgebra;
use gcross::cli::{self, DefinitionDocument, Subject};
use gcross::corpus::{self, Example};
use gcross::crossed::CrossedProduct;
use gcross::graded::GradedAlgebra;
use gcross::groupoid::FiniteGroupoid;
use gcross::report::ValidationReport;
use gcross::scalar::{Elem, Field};
use gcross::separability::{casimir_construct, casimir_verify, separability_of_crossed, trace_solution_from_casimir};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::{json, Value};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Converts through the `json` module so Python sees dicts and lists.
fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn parse_vector(f: &Field, v: &[String], dim: usize) -> PyResult<Vec<Elem>> {
    if v.len() != dim {
        return Err(PyValueError::new_err(format!("expected {dim} coordinates, got {}", v.len())));
    }
    v.iter().map(|s| f.parse_scalar(s).map_err(value_error)).collect()
}

fn format_vector(v: &[Elem]) -> Vec<String> {
    v.iter().map(Field::format_scalar).collect()
}

fn violations_json(r: &ValidationReport) -> Value {
    serde_json::to_value(&r.violations).expect("plain data")
}

/// A finite groupoid with dense arrow indices.
#[pyclass(name = "Groupoid", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGroupoid {
    inner: FiniteGroupoid,
}

#[pymethods]
impl PyGroupoid {
    /// Pair groupoid on `n` indices; arrow `(i, j)` has index `i * n + j`.
    #[staticmethod]
    fn pair(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FiniteGroupoid::pair(n).map_err(value_error)? })
    }

    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FiniteGroupoid::cyclic(n).map_err(value_error)? })
    }

    #[staticmethod]
    fn klein_four() -> Self {
        Self { inner: FiniteGroupoid::klein_four() }
    }

    /// Group from a multiplication table with identity at index 0.
    #[staticmethod]
    #[pyo3(signature = (table, labels=None))]
    fn group(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        Ok(Self { inner: FiniteGroupoid::group(&table, labels).map_err(value_error)? })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Groupoid(arrows={}, objects={})", self.inner.len(), self.inner.objects().len())
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    #[getter]
    fn objects(&self) -> Vec<usize> {
        self.inner.objects().to_vec()
    }

    fn src(&self, s: usize) -> PyResult<usize> {
        self.check(s)?;
        Ok(self.inner.src(s))
    }

    fn dst(&self, s: usize) -> PyResult<usize> {
        self.check(s)?;
        Ok(self.inner.dst(s))
    }

    fn inv(&self, s: usize) -> PyResult<usize> {
        self.check(s)?;
        Ok(self.inner.inv(s))
    }

    /// `s` after `t`, or None when not composable.
    fn compose(&self, s: usize, t: usize) -> PyResult<Option<usize>> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.inner.compose(s, t))
    }

    fn isotropy(&self, e: usize) -> PyResult<Vec<usize>> {
        if !self.inner.is_object(e) {
            return Err(PyValueError::new_err(format!("{e} is not an object")));
        }
        Ok(self.inner.isotropy_arrows(e))
    }

    /// Axiom violations; empty when the tables form a groupoid.
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &violations_json(&self.inner.validate()))
    }
}

impl PyGroupoid {
    fn check(&self, s: usize) -> PyResult<()> {
        if s >= self.inner.len() {
            return Err(PyValueError::new_err(format!("arrow {s} out of range")));
        }
        Ok(())
    }
}

/// A finite-dimensional algebra given by structure constants.
#[pyclass(name = "Algebra", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAlgebra {
    inner: StructureConstantAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// `M_n` over ℚ (`p = 0`) or `GF(p)`.
    #[staticmethod]
    #[pyo3(signature = (n, p=0))]
    fn matrix(n: usize, p: u64) -> PyResult<Self> {
        let f = if p == 0 { Field::Rational } else { Field::prime(p).map_err(value_error)? };
        Ok(Self { inner: StructureConstantAlgebra::matrix(&f, n).map_err(value_error)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, field={})", self.inner.dim(), self.inner.field())
    }

    fn unit(&self) -> Option<Vec<String>> {
        self.inner.unit().map(format_vector)
    }

    fn basis_vector(&self, i: usize) -> PyResult<Vec<String>> {
        if i >= self.inner.dim() {
            return Err(PyValueError::new_err(format!("basis index {i} out of range")));
        }
        Ok(format_vector(&self.inner.basis_vector(i)))
    }

    fn mul(&self, a: Vec<String>, b: Vec<String>) -> PyResult<Vec<String>> {
        let f = self.inner.field();
        let a = parse_vector(f, &a, self.inner.dim())?;
        let b = parse_vector(f, &b, self.inner.dim())?;
        Ok(format_vector(&self.inner.mul(&a, &b)))
    }

    fn center_dim(&self) -> usize {
        self.inner.center().dim()
    }

    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &violations_json(&self.inner.validate()))
    }

    /// Verdict string: pass (simple), fail, undecided or not-certified.
    #[pyo3(signature = (seed=0))]
    fn is_simple(&self, seed: u64) -> (String, String) {
        let r = self.inner.is_simple(seed);
        (r.verdict.to_string(), r.detail)
    }
}

/// A graded algebra, possibly a crossed product.
#[pyclass(name = "GradedRing", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGradedRing {
    inner: GradedAlgebra,
    crossed: Option<CrossedProduct>,
}

#[pymethods]
impl PyGradedRing {
    /// A corpus example such as `"matrix-3"`, `"cbrt2"` or `"non-strong"`.
    #[staticmethod]
    fn example(name: &str) -> PyResult<Self> {
        Ok(match corpus::example(name).map_err(value_error)? {
            Example::Crossed(cp) => Self { inner: cp.graded().clone(), crossed: Some(cp) },
            Example::Graded(r) => Self { inner: r, crossed: None },
        })
    }

    /// Loads a definition document; it must pass validation.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = DefinitionDocument::parse(text).map_err(value_error)?;
        let (entries, _, subject) = cli::validate_document(&doc, false).map_err(value_error)?;
        match subject {
            Some(Subject::Crossed(cp)) => Ok(Self { inner: cp.graded().clone(), crossed: Some(cp) }),
            Some(Subject::Graded(r)) => Ok(Self { inner: r, crossed: None }),
            None => {
                let failed: Vec<String> = entries.iter().filter(|e| !e.verdict.is_pass()).map(|e| e.check.clone()).collect();
                Err(PyValueError::new_err(format!("document fails validation: {failed:?}")))
            }
        }
    }

    fn to_json(&self) -> String {
        match &self.crossed {
            Some(cp) => DefinitionDocument::from_system("", cp.system()).to_json(),
            None => DefinitionDocument::from_graded("", &self.inner).to_json(),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().to_vec()
    }

    #[getter]
    fn groupoid(&self) -> PyGroupoid {
        PyGroupoid { inner: self.inner.groupoid().clone() }
    }

    #[getter]
    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra().clone() }
    }

    #[getter]
    fn is_crossed_product_presentation(&self) -> bool {
        self.crossed.is_some()
    }

    fn __repr__(&self) -> String {
        format!("GradedRing(dim={}, arrows={})", self.inner.dim(), self.inner.groupoid().len())
    }

    fn check_grading<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &violations_json(&self.inner.check_grading()))
    }

    /// Arrows at which `1 ∈ R_σ R_{σ⁻¹}` fails.
    fn strongly_graded_failures(&self) -> PyResult<Vec<usize>> {
        let units = self.inner.object_units().map_err(value_error)?;
        Ok(self.inner.is_strongly_graded(&units).failing())
    }

    /// Separability of `R` over `R₀` by the trace criterion.
    fn separability<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let rep = match &self.crossed {
            Some(cp) => separability_of_crossed(cp).map_err(value_error)?,
            None => {
                let units = self.inner.object_units().map_err(value_error)?;
                gcross::separability::separability_of_graded(&self.inner, &units).map_err(value_error)?.1
            }
        };
        let g = self.inner.groupoid();
        let objects: Vec<Value> = rep
            .objects
            .iter()
            .map(|o| {
                json!({
                    "object": g.label(o.object),
                    "isotropy_size": o.isotropy_size,
                    "center_dim": o.center_dim,
                    "verdict": o.verdict,
                    "detail": o.detail,
                    "trace_solution": o.trace_solution.as_deref().map(format_vector),
                })
            })
            .collect();
        to_py(py, &json!({ "verdict": rep.verdict, "objects": objects }))
    }

    /// Builds the Casimir family, verifies it and derives trace solutions
    /// back from it.
    fn casimir<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let cp = self.crossed.as_ref().ok_or_else(|| PyRuntimeError::new_err("needs a crossed-product presentation"))?;
        let rep = separability_of_crossed(cp).map_err(value_error)?;
        let fam = casimir_construct(cp, &rep).map_err(value_error)?;
        let check = casimir_verify(cp, &fam);
        let derived = trace_solution_from_casimir(cp, &fam).map_err(value_error)?;
        let g = cp.groupoid();
        let d: serde_json::Map<String, Value> = derived.iter().map(|(&e, v)| (g.label(e).to_string(), json!(format_vector(v)))).collect();
        to_py(
            py,
            &json!({
                "verified": check.is_ok(),
                "violations": violations_json(&check),
                "family": cli::family_json(cp, &fam),
                "trace_solutions": d,
            }),
        )
    }
}

/// Runs the command-line tool in-process: returns (exit code, stdout, stderr).
#[pyfunction]
fn run(args: Vec<String>) -> (u8, String, String) {
    let out = cli::run(std::iter::once("gcross".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

/// The definition document of a corpus example.
#[pyfunction]
fn example_document(name: &str) -> PyResult<String> {
    Ok(cli::example_document(name).map_err(value_error)?.to_json())
}

#[pyfunction]
fn example_names() -> Vec<&'static str> {
    corpus::EXAMPLE_NAMES.to_vec()
}

#[pymodule]
pub fn gcross_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupoid>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyGradedRing>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(example_document, m)?)?;
    m.add_function(wrap_pyfunction!(example_names, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
