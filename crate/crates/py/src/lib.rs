//! Python module `bdg`. Vertices cross the boundary as strings such as `"x0"` and `"y2"`.

use bdg_core::generators as gen;
use bdg_core::oracle;
use bdg_core::{BipartiteDigraph, ConditionSpec, EngineMode, Error, Vertex};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(bdg, TheoremViolation, PyRuntimeError);
create_exception!(bdg, MatchingAbsent, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TheoremViolation { .. } => TheoremViolation::new_err(e.to_string()),
        Error::MatchingAbsent => MatchingAbsent::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn vertex(s: &str) -> PyResult<Vertex> {
    s.parse().map_err(|_| PyValueError::new_err(format!("bad vertex {s:?}")))
}

fn names(seq: &[Vertex]) -> Vec<String> {
    seq.iter().map(Vertex::to_string).collect()
}

fn mode(name: &str) -> PyResult<EngineMode> {
    match name {
        "full" => Ok(EngineMode::Full),
        "remark26" => Ok(EngineMode::Remark26Forward),
        "remark26-reverse" => Ok(EngineMode::Remark26Reverse),
        _ => Err(PyValueError::new_err(format!("unknown mode {name:?}"))),
    }
}

/// Balanced or unbalanced bipartite digraph with classes X and Y.
#[pyclass(name = "Digraph", eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDigraph {
    inner: BipartiteDigraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (a, b, arcs = Vec::new()))]
    fn new(a: usize, b: usize, arcs: Vec<(String, String)>) -> PyResult<Self> {
        let arcs = arcs.iter().map(|(u, v)| Ok((vertex(u)?, vertex(v)?))).collect::<PyResult<Vec<_>>>()?;
        Ok(PyDigraph { inner: BipartiteDigraph::build(a, b, &arcs).map_err(to_py)? })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyDigraph { inner: BipartiteDigraph::parse(text).map_err(to_py)? })
    }

    #[staticmethod]
    fn parse_single_line(text: &str) -> PyResult<Self> {
        Ok(PyDigraph { inner: BipartiteDigraph::parse_single_line(text).map_err(to_py)? })
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn single_line(&self) -> String {
        self.inner.single_line()
    }

    #[getter]
    fn a(&self) -> usize {
        self.inner.a()
    }

    #[getter]
    fn b(&self) -> usize {
        self.inner.b()
    }

    fn has_arc(&self, u: &str, v: &str) -> PyResult<bool> {
        Ok(self.inner.has_arc(vertex(u)?, vertex(v)?))
    }

    fn add_arc(&mut self, u: &str, v: &str) -> PyResult<()> {
        self.inner.add_arc(vertex(u)?, vertex(v)?).map_err(to_py)
    }

    fn remove_arc(&mut self, u: &str, v: &str) -> PyResult<()> {
        self.inner.remove_arc(vertex(u)?, vertex(v)?).map_err(to_py)
    }

    fn arcs(&self) -> Vec<(String, String)> {
        self.inner.arcs().into_iter().map(|(u, v)| (u.to_string(), v.to_string())).collect()
    }

    /// `(out_degree, in_degree)`, optionally counting only neighbours in `within`.
    #[pyo3(signature = (v, within = None))]
    fn degrees(&self, v: &str, within: Option<Vec<String>>) -> PyResult<(usize, usize)> {
        let restriction = match within {
            Some(vs) => {
                let vs = vs.iter().map(|s| vertex(s)).collect::<PyResult<Vec<_>>>()?;
                Some(bdg_core::VertexSet::from_vertices(self.inner.a(), self.inner.b(), &vs).map_err(to_py)?)
            }
            None => None,
        };
        let d = self.inner.degrees(vertex(v)?, restriction.as_ref()).map_err(to_py)?;
        Ok((d.out, d.in_))
    }

    fn transpose(&self) -> Self {
        PyDigraph { inner: self.inner.transpose() }
    }

    fn swap_classes(&self) -> Self {
        PyDigraph { inner: self.inner.swap_classes() }
    }

    fn __repr__(&self) -> String {
        format!("Digraph.parse_single_line({:?})", self.inner.single_line())
    }
}

#[pyclass(frozen, get_all)]
struct ConditionReport {
    name: String,
    holds: bool,
    threshold: String,
    /// `(u, v, sum)` in report order.
    violations: Vec<(String, String, usize)>,
}

#[pyclass(frozen, get_all, from_py_object)]
#[derive(Clone)]
struct Witness {
    kind: String,
    u: String,
    v: String,
    sum: usize,
    bound: usize,
}

/// Engine result: `cycle` is set for a Hamiltonian cycle, `witness` otherwise.
#[pyclass(frozen, get_all)]
struct Outcome {
    cycle: Option<Vec<String>>,
    witness: Option<Witness>,
    trace: Vec<String>,
}

#[pyclass(frozen, get_all)]
struct VerificationStats {
    total: u64,
    satisfying: u64,
    hamiltonian_among_satisfying: u64,
    engine_cycles_among_satisfying: u64,
    counterexamples: Vec<u64>,
    /// `(index, reason)` pairs.
    engine_failures: Vec<(u64, String)>,
}

/// `cond` is one of `a2star`, `ak-star`, `a_k`, `strict-half`, `dirac`.
#[pyfunction]
#[pyo3(signature = (d, cond = "a2star", k = 2))]
fn check(d: &PyDigraph, cond: &str, k: usize) -> PyResult<ConditionReport> {
    let spec = match cond {
        "a2star" => ConditionSpec::AkStar(2),
        "ak-star" => ConditionSpec::AkStar(k),
        "a_k" => ConditionSpec::Ak(k),
        "strict-half" => ConditionSpec::StrictHalfSum,
        "dirac" => ConditionSpec::DiracBipartite,
        _ => return Err(PyValueError::new_err(format!("unknown condition {cond:?}"))),
    };
    let r = bdg_core::check(&d.inner, spec).map_err(to_py)?;
    Ok(ConditionReport {
        name: spec.name(),
        holds: r.holds,
        threshold: r.threshold.to_string(),
        violations: r.violations.iter().map(|w| (w.u.to_string(), w.v.to_string(), w.sum)).collect(),
    })
}

#[pyfunction]
#[pyo3(signature = (d, mode = "full"))]
fn find_hamiltonian(d: &PyDigraph, mode: &str) -> PyResult<Outcome> {
    let run = bdg_core::run_engine(&d.inner, self::mode(mode)?).map_err(to_py)?;
    let trace = run.trace.iter().map(ToString::to_string).collect();
    Ok(match run.outcome {
        bdg_core::Outcome::Cycle(seq) => Outcome { cycle: Some(names(&seq)), witness: None, trace },
        bdg_core::Outcome::Witness(w) => Outcome {
            cycle: None,
            witness: Some(Witness {
                kind: w.kind.to_string(),
                u: w.u.to_string(),
                v: w.v.to_string(),
                sum: w.sum,
                bound: w.bound,
            }),
            trace,
        },
    })
}

#[pyfunction]
fn verify_hamiltonian_cycle(d: &PyDigraph, seq: Vec<String>) -> PyResult<bool> {
    let seq = seq.iter().map(|s| vertex(s)).collect::<PyResult<Vec<_>>>()?;
    Ok(bdg_core::verify_hamiltonian_cycle(&d.inner, &seq))
}

/// A cycle of `length` (default `2·min(a, b)`), or `None`.
#[pyfunction]
#[pyo3(signature = (d, length = None))]
fn brute_cycle(d: &PyDigraph, length: Option<usize>) -> PyResult<Option<Vec<String>>> {
    let length = length.unwrap_or(2 * d.inner.a().min(d.inner.b()));
    Ok(oracle::brute_cycle(&d.inner, length).map_err(to_py)?.map(|s| names(&s)))
}

#[pyfunction]
fn count_cycles(d: &PyDigraph, length: usize) -> PyResult<u64> {
    oracle::count_cycles(&d.inner, length).map_err(to_py)
}

#[pyfunction]
fn complete_bipartite(a: usize, b: usize) -> PyDigraph {
    PyDigraph { inner: gen::complete_bipartite(a, b) }
}

#[pyfunction]
fn fig1_example() -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: gen::fig1_example().map_err(to_py)? })
}

#[pyfunction]
fn fig2(a: usize, b: usize, k: usize) -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: gen::fig2(gen::Fig2Params { a, b, k }).map_err(to_py)? })
}

#[pyfunction]
fn random_digraph(a: usize, b: usize, p: f64, seed: u64) -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: gen::random_digraph(a, b, p, seed).map_err(to_py)? })
}

#[pyfunction]
fn random_satisfying(a: usize, k: usize, seed: u64) -> PyResult<PyDigraph> {
    Ok(PyDigraph { inner: gen::random_satisfying(a, k, seed).map_err(to_py)? })
}

/// Engine and oracle over every digraph with `a` vertices per class, or the
/// index interval `[lo, hi)` of the enumeration.
#[pyfunction]
#[pyo3(signature = (a, k = 2, mode = "full", lo = None, hi = None, jobs = 1))]
fn exhaustive_verify(
    py: Python<'_>,
    a: usize,
    k: usize,
    mode: &str,
    lo: Option<u64>,
    hi: Option<u64>,
    jobs: usize,
) -> PyResult<VerificationStats> {
    let mode = self::mode(mode)?;
    let range = match (lo, hi) {
        (None, None) => None,
        (lo, hi) => Some(lo.unwrap_or(0)..hi.unwrap_or(u64::MAX)),
    };
    let s = py.detach(|| oracle::exhaustive_verify_parallel(a, k, mode, range, jobs)).map_err(to_py)?;
    Ok(VerificationStats {
        total: s.total,
        satisfying: s.satisfying,
        hamiltonian_among_satisfying: s.hamiltonian_among_satisfying,
        engine_cycles_among_satisfying: s.engine_cycles_among_satisfying,
        counterexamples: s.counterexamples,
        engine_failures: s.engine_failures.into_iter().map(|f| (f.code, f.reason)).collect(),
    })
}

#[pyfunction]
fn sharpness_search(py: Python<'_>, a: usize, k: usize) -> PyResult<Vec<u64>> {
    py.detach(|| oracle::sharpness_search(a, k)).map_err(to_py)
}

#[pyfunction]
fn conjecture_search(py: Python<'_>, a: usize, b: usize) -> PyResult<Vec<u64>> {
    py.detach(|| oracle::conjecture_search(a, b)).map_err(to_py)
}

#[pymodule]
fn bdg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<ConditionReport>()?;
    m.add_class::<Witness>()?;
    m.add_class::<Outcome>()?;
    m.add_class::<VerificationStats>()?;
    m.add("TheoremViolation", m.py().get_type::<TheoremViolation>())?;
    m.add("MatchingAbsent", m.py().get_type::<MatchingAbsent>())?;
    m.add("RANDOM_GENERATOR", gen::RANDOM_GENERATOR)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(find_hamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(verify_hamiltonian_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(brute_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(count_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(fig1_example, m)?)?;
    m.add_function(wrap_pyfunction!(fig2, m)?)?;
    m.add_function(wrap_pyfunction!(random_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(random_satisfying, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_verify, m)?)?;
    m.add_function(wrap_pyfunction!(sharpness_search, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_search, m)?)?;
    Ok(())
}
