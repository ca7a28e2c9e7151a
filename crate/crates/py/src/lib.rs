//! Python bindings. Reports cross the boundary as plain dicts and lists.

use flagsphere::construct::{example_start, run_corpus, ConstructionState, CorpusConfig, StepMode};
use flagsphere::enumerative::{certify_negative_real_roots, delannoy_poly, vectors};
use flagsphere::flip::{verify_iso_h_p_with, SearchMode};
use flagsphere::{families, io, Coefficients, Polynomial};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

create_exception!(
    pyflagsphere,
    GuardError,
    PyRuntimeError,
    "A face-count or capacity guard was hit."
);

fn err(e: flagsphere::Error) -> PyErr {
    match e {
        flagsphere::Error::FaceGuard { .. } | flagsphere::Error::Capacity(_) => {
            GuardError::new_err(e.to_string())
        }
        flagsphere::Error::UnknownVertex(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for flagsphere::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => PyList::new(
            py,
            a.iter()
                .map(|x| json_to_py(py, x))
                .collect::<PyResult<Vec<_>>>()?,
        )?
        .into_any(),
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, json_to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

fn coeff(s: &str) -> PyResult<Coefficients> {
    s.parse().py_err()
}

#[pyclass(module = "pyflagsphere", frozen)]
struct Graph(flagsphere::Graph);

#[pymethods]
impl Graph {
    /// A graph from vertex labels and index pairs.
    #[new]
    fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        flagsphere::Graph::from_edges(labels, edges)
            .py_err()
            .map(Graph)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        io::parse_graph(text).py_err().map(Graph)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_graph_json(text).py_err().map(Graph)
    }

    fn to_text(&self) -> String {
        io::emit_graph(&self.0)
    }

    fn to_json(&self) -> String {
        io::emit_graph_json(&self.0)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn is_ternary(&self) -> bool {
        self.0.is_ternary()
    }

    /// An induced cycle of length divisible by three, as labels.
    fn ternary_witness(&self) -> Option<Vec<String>> {
        self.0.ternary().witness.map(|w| w.labels(&self.0))
    }

    fn is_planar(&self) -> bool {
        self.0.is_planar()
    }

    /// Kuratowski subdivision as `{"kind", "branch", "paths"}` over labels.
    fn kuratowski<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        let Some(k) = self.0.kuratowski_witness() else {
            return Ok(None);
        };
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| self.0.label(v).to_string())
                .collect::<Vec<_>>()
        };
        let d = PyDict::new(py);
        d.set_item("kind", format!("{:?}", k.kind))?;
        d.set_item("branch", names(&k.branch))?;
        d.set_item(
            "paths",
            k.paths.iter().map(|p| names(p)).collect::<Vec<_>>(),
        )?;
        Ok(Some(d.into_any()))
    }

    fn independence_number(&self) -> usize {
        self.0.independence_number()
    }

    fn is_well_covered(&self) -> bool {
        self.0.is_well_covered()
    }

    fn is_one_well_covered(&self) -> bool {
        self.0.is_one_well_covered()
    }

    fn canonical_form(&self) -> Vec<u32> {
        self.0.canonical_form().0
    }

    fn is_isomorphic(&self, other: &Graph) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    /// Label map onto `other`, or `None`.
    fn isomorphism(&self, other: &Graph) -> Option<Vec<(String, String)>> {
        self.0
            .isomorphism_to(&other.0)
            .map(|i| i.label_pairs(&self.0, &other.0))
    }

    fn edge_subdivision(&self, x: &str, y: &str, fresh: &str) -> PyResult<Self> {
        self.0.edge_subdivision(x, y, fresh).py_err().map(Graph)
    }

    fn complement(&self) -> Self {
        Graph(self.0.complement())
    }

    fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex(flagsphere::SimplicialComplex::independence_complex(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.0.n(), self.0.edge_count())
    }
}

#[pyclass(module = "pyflagsphere", frozen)]
struct SimplicialComplex(flagsphere::SimplicialComplex);

#[pymethods]
impl SimplicialComplex {
    /// A complex from facets given as label lists.
    #[new]
    fn new(facets: Vec<Vec<String>>) -> PyResult<Self> {
        flagsphere::SimplicialComplex::from_labeled_facets(&facets)
            .py_err()
            .map(SimplicialComplex)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        io::parse_complex(text).py_err().map(SimplicialComplex)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_complex_json(text).py_err().map(SimplicialComplex)
    }

    fn to_text(&self) -> String {
        io::emit_complex(&self.0)
    }

    fn to_json(&self) -> String {
        io::emit_complex_json(&self.0)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn facets(&self) -> Vec<Vec<String>> {
        self.0
            .facets()
            .iter()
            .map(|&f| self.0.face_labels(f))
            .collect()
    }

    #[getter]
    fn dim(&self) -> isize {
        self.0.dim()
    }

    fn f_vector(&self) -> PyResult<Vec<u64>> {
        self.0.f_vector().py_err()
    }

    /// `{"f", "h", "gamma"}`; `gamma` is `None` unless h is palindromic.
    fn vectors<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let v = vectors(&self.0).py_err()?;
        let d = PyDict::new(py);
        d.set_item("f", v.f)?;
        d.set_item("h", v.h)?;
        d.set_item("gamma", v.gamma)?;
        Ok(d)
    }

    #[pyo3(signature = (coeff = "F2"))]
    fn reduced_homology(&self, coeff: &str) -> PyResult<Vec<usize>> {
        Ok(self.0.reduced_homology(self::coeff(coeff)?).py_err()?.betti)
    }

    #[pyo3(signature = (coeff = "F2"))]
    fn is_homology_sphere(&self, coeff: &str) -> PyResult<bool> {
        self.0.is_homology_sphere(self::coeff(coeff)?).py_err()
    }

    #[pyo3(signature = (coeff = "F2"))]
    fn is_cohen_macaulay(&self, coeff: &str) -> PyResult<bool> {
        self.0.is_cohen_macaulay(self::coeff(coeff)?).py_err()
    }

    #[pyo3(signature = (coeff = "F2"))]
    fn is_gorenstein(&self, coeff: &str) -> PyResult<bool> {
        self.0.is_gorenstein(self::coeff(coeff)?).py_err()
    }

    fn is_pseudomanifold(&self) -> bool {
        self.0.is_pseudomanifold()
    }

    fn is_vertex_decomposable(&self) -> bool {
        self.0.is_vertex_decomposable()
    }

    fn is_flag(&self) -> bool {
        self.0.is_flag()
    }

    fn link(&self, face: Vec<String>) -> PyResult<Self> {
        self.0.link_of(&face).py_err().map(SimplicialComplex)
    }

    fn join(&self, other: &SimplicialComplex) -> PyResult<Self> {
        self.0.join(&other.0).py_err().map(SimplicialComplex)
    }

    fn edge_subdivision(&self, x: &str, y: &str, fresh: &str) -> PyResult<Self> {
        self.0
            .edge_subdivision(x, y, fresh)
            .py_err()
            .map(SimplicialComplex)
    }

    fn edge_contraction(&self, keep: &str, remove: &str) -> PyResult<Self> {
        self.0
            .edge_contraction(keep, remove)
            .py_err()
            .map(SimplicialComplex)
    }

    /// The graph whose independence complex this flag complex is.
    fn complement_skeleton_graph(&self) -> PyResult<Graph> {
        self.0.complement_skeleton_graph().py_err().map(Graph)
    }

    fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(n={}, dim={}, facets={})",
            self.0.n(),
            self.0.dim(),
            self.0.facets().len()
        )
    }
}

/// An immutable construction state; `step` returns a new one.
#[pyclass(module = "pyflagsphere", frozen)]
struct Construction(ConstructionState);

fn mode(s: &str) -> PyResult<StepMode> {
    s.parse().py_err()
}

#[pymethods]
impl Construction {
    /// Start from `G_{m_1} ⊔ ... ⊔ G_{m_s}`.
    #[new]
    #[pyo3(signature = (ms, mode = "strict"))]
    fn new(ms: Vec<usize>, mode: &str) -> PyResult<Self> {
        Ok(Construction(
            ConstructionState::start(&ms)
                .py_err()?
                .with_mode(self::mode(mode)?),
        ))
    }

    /// Three pentagons on vertices `1..15`.
    #[staticmethod]
    #[pyo3(signature = (mode = "strict"))]
    fn example(mode: &str) -> PyResult<Self> {
        Ok(Construction(
            example_start().py_err()?.with_mode(self::mode(mode)?),
        ))
    }

    #[pyo3(signature = (x, y, fresh = None))]
    fn step(&self, x: &str, y: &str, fresh: Option<&str>) -> PyResult<Self> {
        self.0.step(x, y, fresh).py_err().map(Construction)
    }

    #[getter]
    fn graph(&self) -> Graph {
        Graph(self.0.graph().clone())
    }

    fn steps<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.steps())
    }

    fn w_edges(&self) -> Vec<[usize; 2]> {
        self.0.w_edges()
    }

    fn w_is_tree(&self) -> bool {
        self.0.w_is_tree()
    }

    fn nonplanarity_predictor(&self) -> bool {
        self.0.nonplanarity_predictor()
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.classify().py_err()?)
    }
}

#[pyfunction]
fn build_gm(m: usize) -> PyResult<Graph> {
    families::build_gm(m).py_err().map(Graph)
}

#[pyfunction]
fn build_gm_union(ms: Vec<usize>) -> PyResult<Graph> {
    families::build_gm_union(&ms).py_err().map(Graph)
}

#[pyfunction]
fn build_r3() -> Graph {
    Graph(families::build_r3())
}

#[pyfunction]
fn build_mk2(m: usize) -> PyResult<Graph> {
    families::build_mk2(m).py_err().map(Graph)
}

#[pyfunction]
fn crosspolytope_boundary(m: usize) -> PyResult<SimplicialComplex> {
    families::crosspolytope_boundary(m)
        .py_err()
        .map(SimplicialComplex)
}

/// Coefficients of `Σ_k d(m,k) t^k`.
#[pyfunction]
fn delannoy_row(m: usize) -> Vec<BigInt> {
    delannoy_poly(m).coeffs().to_vec()
}

/// Sturm certificate that every root of the polynomial (low degree first) is real and negative.
#[pyfunction]
fn certify_real_roots<'py>(py: Python<'py>, coeffs: Vec<BigInt>) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &certify_negative_real_roots(&Polynomial::new(coeffs)).py_err()?,
    )
}

#[pyfunction]
#[pyo3(signature = (n, exhaustive = false))]
fn verify_iso_h_p<'py>(py: Python<'py>, n: usize, exhaustive: bool) -> PyResult<Bound<'py, PyAny>> {
    let mode = if exhaustive {
        SearchMode::Exhaustive
    } else {
        SearchMode::LowDegree
    };
    let r = verify_iso_h_p_with(n, mode).py_err()?;
    let d = to_py(py, &r)?;
    d.set_item("passed", r.passed())?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (seed, runs = 200, mode = "strict", max_n = 6, max_steps = 4))]
fn corpus<'py>(
    py: Python<'py>,
    seed: u64,
    runs: usize,
    mode: &str,
    max_n: usize,
    max_steps: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let config = CorpusConfig {
        runs,
        seed,
        max_n,
        max_steps,
        mode: self::mode(mode)?,
    };
    to_py(py, &run_corpus(&config).py_err()?)
}

/// Run acceptance criteria (all of them by default); one dict per criterion.
#[pyfunction]
#[pyo3(signature = (ids = None))]
fn acceptance<'py>(py: Python<'py>, ids: Option<Vec<usize>>) -> PyResult<Bound<'py, PyAny>> {
    let n = flagsphere::acceptance::CRITERIA.len();
    let ids = ids.unwrap_or_else(|| (1..=n).collect());
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > n) {
        return Err(PyValueError::new_err(format!("no criterion {bad}")));
    }
    let rows: Vec<_> = ids
        .into_iter()
        .map(flagsphere::acceptance::run_criterion)
        .collect();
    to_py(py, &rows)
}

#[pymodule]
fn pyflagsphere(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<SimplicialComplex>()?;
    m.add_class::<Construction>()?;
    m.add("GuardError", m.py().get_type::<GuardError>())?;
    m.add_function(wrap_pyfunction!(build_gm, m)?)?;
    m.add_function(wrap_pyfunction!(build_gm_union, m)?)?;
    m.add_function(wrap_pyfunction!(build_r3, m)?)?;
    m.add_function(wrap_pyfunction!(build_mk2, m)?)?;
    m.add_function(wrap_pyfunction!(crosspolytope_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(delannoy_row, m)?)?;
    m.add_function(wrap_pyfunction!(certify_real_roots, m)?)?;
    m.add_function(wrap_pyfunction!(verify_iso_h_p, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    m.add_function(wrap_pyfunction!(acceptance, m)?)?;
    Ok(())
}
