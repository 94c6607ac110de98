//! Python bindings. Structured results cross the boundary as JSON and are
//! decoded with the `json` module, so dicts and lists are plain Python.

use std::time::Duration;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use engine::{
    all_ideals, build_ag, build_zero_divisor_graph, complete_bipartite, complete_graph,
    genus_formula_bipartite, genus_formula_complete, ideal_name, validate_ring, verify_embedding, Budget,
    FiniteRing, RingSpec, RotationSystem, SimpleGraph, Suite, ValidationReport,
};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn from_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(err)?;
    py.import("json")?.call_method1("loads", (s,))
}

fn budget(nodes: Option<u64>, ms: Option<u64>) -> Budget {
    let mut b = match ms {
        Some(ms) => Budget {
            max_time: Some(Duration::from_millis(ms)),
            ..Budget::default()
        },
        None => Budget::default(),
    };
    if let Some(n) = nodes {
        b.max_nodes = n;
    }
    b
}

/// A finite commutative ring built from a spec such as `zn:12`,
/// `prod:(zn:2,zn:3)` or `cat:f2xy_x2y2`.
#[pyclass(name = "Ring", module = "annigraph", frozen)]
struct Ring {
    inner: FiniteRing,
    spec: String,
}

impl Ring {
    fn check(&self, a: usize) -> PyResult<usize> {
        if a < self.inner.size() {
            Ok(a)
        } else {
            Err(PyIndexError::new_err(format!(
                "element {a} out of range 0..{}",
                self.inner.size()
            )))
        }
    }
}

#[pymethods]
impl Ring {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let inner = RingSpec::parse(spec).and_then(|s| s.build()).map_err(err)?;
        Ok(Ring {
            inner,
            spec: spec.to_string(),
        })
    }

    /// Ring from a JSON table document (`size`, `zero`, `one`, `add`, `mul`).
    #[staticmethod]
    fn from_table_json(text: &str) -> PyResult<Self> {
        let table = serde_json::from_str(text).map_err(err)?;
        let inner = FiniteRing::from_table(table).map_err(err)?;
        Ok(Ring {
            inner,
            spec: "table".to_string(),
        })
    }

    fn to_table_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_table()).map_err(err)
    }

    #[getter]
    fn spec(&self) -> &str {
        &self.spec
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn fingerprint(&self) -> &str {
        self.inner.fingerprint()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn add(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self.inner.add(self.check(a)?, self.check(b)?))
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self.inner.mul(self.check(a)?, self.check(b)?))
    }

    /// `None` if every axiom holds, else a description of the first failure.
    fn validate(&self) -> Option<String> {
        match validate_ring(&self.inner) {
            ValidationReport::Pass => None,
            other => Some(format!("{other:?}")),
        }
    }

    /// The ideal lattice as a list of `{"name", "members"}` dicts.
    fn ideals<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = &self.inner;
        let lattice = all_ideals(r).map_err(err)?;
        let rows: Vec<serde_json::Value> = lattice
            .ideals()
            .iter()
            .map(|i| serde_json::json!({"name": ideal_name(r, &lattice, i), "members": i.to_vec()}))
            .collect();
        from_json(py, &rows)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let lattice = all_ideals(&self.inner).map_err(err)?;
        let c = engine::classify(&self.inner, &lattice).map_err(err)?;
        from_json(py, &c)
    }

    /// Annihilating-ideal graph.
    fn ag(&self) -> PyResult<Graph> {
        let lattice = all_ideals(&self.inner).map_err(err)?;
        Ok(Graph {
            inner: build_ag(&self.inner, &lattice).map_err(err)?,
        })
    }

    /// Zero-divisor graph.
    fn zdg(&self) -> Graph {
        Graph {
            inner: build_zero_divisor_graph(&self.inner),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?}, size={})", self.spec, self.inner.size())
    }
}

/// A finite simple undirected graph with labelled vertices.
#[pyclass(name = "Graph", module = "annigraph", frozen)]
struct Graph {
    inner: SimpleGraph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges, labels=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let labels = match labels {
            Some(l) if l.len() != n => return Err(err(format!("{} labels for {n} vertices", l.len()))),
            Some(l) => l,
            None => (0..n).map(|i| format!("v{i}")).collect(),
        };
        let mut g = SimpleGraph::new("G", labels);
        for (u, v) in edges {
            g.add_edge(u, v).map_err(err)?;
        }
        Ok(Graph { inner: g })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph {
            inner: complete_graph(n),
        }
    }

    #[staticmethod]
    fn complete_bipartite(m: usize, n: usize) -> Self {
        Graph {
            inner: complete_bipartite(m, n),
        }
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(PyIndexError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_json()).map_err(err)
    }

    fn is_planar(&self) -> bool {
        engine::is_planar(&self.inner)
    }

    #[pyo3(signature = (budget_nodes=None, budget_ms=None))]
    fn genus<'py>(
        &self,
        py: Python<'py>,
        budget_nodes: Option<u64>,
        budget_ms: Option<u64>,
    ) -> PyResult<Bound<'py, PyAny>> {
        genus(py, self, budget_nodes, budget_ms)
    }

    /// Genus of the embedding given by per-vertex cyclic neighbor orders.
    fn embedding_genus(&self, rotation: Vec<Vec<usize>>) -> PyResult<u64> {
        verify_embedding(&self.inner, &RotationSystem(rotation)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({}, vertices={}, edges={})",
            self.inner.name(),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Exact orientable genus within a budget; returns the result as a dict
/// with `lower`, `upper`, `status`, `witness` and `nodes`.
#[pyfunction]
#[pyo3(signature = (graph, budget_nodes=None, budget_ms=None))]
fn genus<'py>(
    py: Python<'py>,
    graph: &Graph,
    budget_nodes: Option<u64>,
    budget_ms: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let b = budget(budget_nodes, budget_ms);
    let g = &graph.inner;
    let res = py.detach(|| engine::genus_exact(g, &b));
    from_json(py, &res)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, ring: &Ring) -> PyResult<Bound<'py, PyAny>> {
    ring.classify(py)
}

#[pyfunction]
fn genus_complete(n: u64) -> PyResult<u64> {
    genus_formula_complete(n).map_err(err)
}

#[pyfunction]
fn genus_complete_bipartite(m: u64, n: u64) -> PyResult<u64> {
    genus_formula_bipartite(m, n).map_err(err)
}

/// Run a check suite (`lemmas`, `shapes`, `genus` or `all`) over ring specs,
/// defaulting to the built-in corpus.
#[pyfunction]
#[pyo3(signature = (specs=None, suite="all", budget_nodes=None, budget_ms=None))]
fn run_suite<'py>(
    py: Python<'py>,
    specs: Option<Vec<String>>,
    suite: &str,
    budget_nodes: Option<u64>,
    budget_ms: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let suite: Suite = suite.parse().map_err(err)?;
    let corpus = match specs {
        Some(s) => s
            .iter()
            .map(|x| RingSpec::parse(x))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?,
        None => engine::builtin_corpus(),
    };
    let b = budget(budget_nodes, budget_ms);
    let report = py.detach(|| engine::run_suite(&corpus, suite, &b));
    let s = report.summary();
    from_json(
        py,
        &serde_json::json!({
            "passed": report.passed(),
            "summary": {"pass": s.pass, "fail": s.fail, "skipped": s.skipped},
            "results": report.results,
        }),
    )
}

#[pymodule]
fn annigraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(genus_complete, m)?)?;
    m.add_function(wrap_pyfunction!(genus_complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("BUILTIN_CORPUS", engine::BUILTIN_CORPUS.to_vec())?;
    Ok(())
}
