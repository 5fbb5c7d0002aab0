//! Python bindings: graphs, codes, scheme analysis, and closed-form
//! families, mirroring the CLI's JSON reports as Python objects.

use lcgraph::code::{Caps, LinearCode as CoreCode};
use lcgraph::field::FiniteField;
use lcgraph::forms::Family;
use lcgraph::graph::{srg_bounds, NamedFamily};
use lcgraph::scheme::{
    find_q_polynomial_ordering, krein_array, krein_tensor, multiplicity_lc, natural_ordering,
    self_duality_check, spectrum_from_intersection_array, RelationSet,
};
use lcgraph::seq::parse_rational;
use lcgraph::{Graph as CoreGraph, RatSequence};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Convert a serde_json value into native Python objects.
fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, to_py(py, val)?)?;
            }
            dict.into_any()
        }
    })
}

fn json_result<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(value).map_err(err)?;
    Ok(to_py(py, &v)?.unbind())
}

/// An undirected connected-or-not graph with distance-profile analysis.
#[pyclass(name = "Graph")]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    /// Build from an explicit edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::new(n, edges).map_err(err)?,
        })
    }

    /// Build a named family, e.g. "petersen", "cycle:5", "hamming:3,2".
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: NamedFamily::parse(spec).map_err(err)?.build().map_err(err)?,
        })
    }

    /// Parse the JSON or edge-list text formats.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::parse(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn distance_profile(&self, x: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.distance_profile(x).map_err(err)?.counts)
    }

    fn is_ddr(&self) -> PyResult<bool> {
        self.inner.is_ddr().map_err(err)
    }

    /// (holds, failing_index) of the profile at x.
    fn is_log_concave_at(&self, x: usize) -> PyResult<(bool, Option<usize>)> {
        let v = self.inner.is_lc_at(x).map_err(err)?;
        Ok((v.holds(), v.failing_index()))
    }

    /// {"b": [...], "c": [...]} when distance-regular, else None.
    fn intersection_array(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        match self.inner.intersection_array().map_err(err)? {
            Some(ia) => Ok(Some(json_result(py, &ia)?)),
            None => Ok(None),
        }
    }

    /// SRG parameters plus bounds, or None when not strongly regular.
    fn srg(&self, py: Python<'_>) -> PyResult<Option<Py<PyAny>>> {
        match self.inner.srg_parameters().map_err(err)? {
            Some(p) => {
                let b = srg_bounds(p.kappa);
                json_result(
                    py,
                    &serde_json::json!({
                        "parameters": p,
                        "identity_holds": p.identity_holds(),
                        "bounds": b,
                    }),
                )
                .map(Some)
            }
            None => Ok(None),
        }
    }

    fn cartesian_product(&self, other: &Graph) -> Graph {
        Graph {
            inner: self.inner.cartesian_product(&other.inner),
        }
    }

    fn cartesian_power(&self, n: u32) -> Graph {
        Graph {
            inner: self.inner.cartesian_power(n),
        }
    }

    /// Smallest exponent whose power profile at x is log-concave, scanning
    /// polynomial powers up to n_max.
    fn minimal_lc_power(&self, x: usize, n_max: u32) -> PyResult<Option<u32>> {
        let (_, n0) = self.inner.minimal_lc_power(x, n_max).map_err(err)?;
        Ok(n0)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.n(), self.m())
    }
}

/// An [n,k] linear code over GF(q), q a prime power <= 64.
#[pyclass(name = "LinearCode")]
struct LinearCode {
    inner: CoreCode,
    caps: Caps,
}

#[pymethods]
impl LinearCode {
    #[new]
    fn new(q: u64, generator: Vec<Vec<u64>>) -> PyResult<Self> {
        let field = FiniteField::of_order(q).map_err(err)?;
        Ok(LinearCode {
            inner: CoreCode::new(field, generator).map_err(err)?,
            caps: Caps::default(),
        })
    }

    /// Parse the "q n k" + generator rows text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(LinearCode {
            inner: CoreCode::parse(text).map_err(err)?,
            caps: Caps::default(),
        })
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn weight_distribution(&self) -> PyResult<Vec<u64>> {
        Ok(self.inner.weight_distribution(&self.caps).map_err(err)?.counts)
    }

    fn is_projective(&self) -> bool {
        self.inner.is_projective().verdict.holds()
    }

    fn two_weight(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        json_result(py, &self.inner.two_weight_check(&self.caps).map_err(err)?)
    }

    /// d_i = number of cosets of coset weight i, i = 0..=rho.
    fn d_sequence(&self) -> PyResult<Vec<u64>> {
        Ok(self.inner.coset_analysis(&self.caps).map_err(err)?.d)
    }

    fn is_completely_regular(&self) -> PyResult<bool> {
        Ok(self.inner.is_completely_regular(&self.caps).map_err(err)?.holds())
    }

    fn coset_graph(&self) -> PyResult<Graph> {
        let cg = self.inner.coset_graph(&self.caps).map_err(err)?;
        Ok(Graph { inner: cg.graph })
    }

    fn __repr__(&self) -> String {
        format!(
            "LinearCode(q={}, n={}, k={})",
            self.inner.field().order(),
            self.length(),
            self.dimension()
        )
    }
}

/// Full scheme analysis from an intersection array: spectrum, Krein array,
/// Property M, multiplicity log-concavity, self-duality.
#[pyfunction]
#[pyo3(signature = (b, c, tolerance = 1e-9))]
fn scheme_from_array(py: Python<'_>, b: Vec<u64>, c: Vec<u64>, tolerance: f64) -> PyResult<Py<PyAny>> {
    let ia = lcgraph::graph::IntersectionArray::new(b, c).map_err(err)?;
    let spec = spectrum_from_intersection_array(&ia, tolerance).map_err(err)?;
    scheme_report(py, &spec)
}

/// Same analysis from explicit 0/1 relation matrices.
#[pyfunction]
#[pyo3(signature = (matrices, tolerance = 1e-9))]
fn scheme_from_relations(
    py: Python<'_>,
    matrices: Vec<Vec<Vec<u8>>>,
    tolerance: f64,
) -> PyResult<Py<PyAny>> {
    let rels = RelationSet::new(matrices).map_err(err)?;
    let spec = rels.spectrum(tolerance).map_err(err)?;
    scheme_report(py, &spec)
}

fn scheme_report(py: Python<'_>, spec: &lcgraph::scheme::SchemeSpectrum) -> PyResult<Py<PyAny>> {
    let kt = krein_tensor(spec);
    let ordering = find_q_polynomial_ordering(&kt);
    let active = ordering
        .clone()
        .unwrap_or_else(|| natural_ordering(spec.class_count()));
    let ka = krein_array(&kt, &active);
    json_result(
        py,
        &serde_json::json!({
            "mode": if spec.is_exact() { "exact" } else { "float" },
            "spectrum": spec,
            "krein_condition_holds": kt.krein_condition_holds(),
            "q_polynomial_ordering": ordering,
            "krein_array": ka,
            "property_m": ka.property_m(),
            "multiplicity_lc": multiplicity_lc(spec, &active),
            "self_dual": self_duality_check(spec),
        }),
    )
}

/// Evaluate a closed-form family ("johnson-multiplicities", "grassmann",
/// ...) at one parameter tuple; terms as exact "num/den" strings.
#[pyfunction]
fn formula_sequence(family: &str, params: Vec<u64>) -> PyResult<Vec<String>> {
    let fam = Family::parse(family)
        .ok_or_else(|| PyValueError::new_err(format!("unknown family {family:?}")))?;
    let seq = fam.evaluate(&params).map_err(err)?;
    Ok(seq
        .terms()
        .iter()
        .map(lcgraph::seq::rational_to_string)
        .collect())
}

/// Exact log-concavity check on a sequence of "num/den" strings or ints.
#[pyfunction]
fn is_log_concave(terms: Vec<String>) -> PyResult<(bool, Option<usize>)> {
    let parsed: Result<Vec<_>, _> = terms.iter().map(|t| parse_rational(t)).collect();
    let seq = RatSequence::new(parsed.map_err(err)?);
    let v = seq.is_log_concave();
    Ok((v.holds(), v.failing_index()))
}

#[pymodule]
fn lcgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<LinearCode>()?;
    m.add_function(wrap_pyfunction!(scheme_from_array, m)?)?;
    m.add_function(wrap_pyfunction!(scheme_from_relations, m)?)?;
    m.add_function(wrap_pyfunction!(formula_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(is_log_concave, m)?)?;
    Ok(())
}
