//! Python module `longcycle`. Graphs cross the boundary as `(n, edges)`;
//! results come back as plain dicts mirroring the CLI's JSON.

use longcycle::dense_routing::Mode;
use longcycle::density::mad_with_witness;
use longcycle::instances::{gen_hardness_gadget, gen_instance, parse_graph, Family, Format};
use longcycle::solver::{solve as solve_graph, SolveOptions};
use longcycle::{CycleCertificate, Graph};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Builds a graph; `n` defaults to one more than the largest id.
pub fn build_graph(edges: &[(usize, usize)], n: Option<usize>) -> longcycle::Result<Graph> {
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

pub fn parse_mode(mode: &str) -> Result<Mode, String> {
    match mode {
        "strict" => Ok(Mode::Strict),
        "relaxed" => Ok(Mode::Relaxed),
        other => Err(format!("mode must be \"strict\" or \"relaxed\", got {other:?}")),
    }
}

pub fn parse_format(format: &str) -> Result<Format, String> {
    match format {
        "edgelist" => Ok(Format::Edgelist),
        "dimacs" => Ok(Format::Dimacs),
        other => Err(format!("format must be \"edgelist\" or \"dimacs\", got {other:?}")),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(x) => match x.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => x.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, x) in map {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn from_py(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    if obj.is_none() {
        return Ok(Value::Null);
    }
    if let Ok(b) = obj.extract::<bool>() {
        return Ok(Value::Bool(b));
    }
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Value::from(i));
    }
    if let Ok(f) = obj.extract::<f64>() {
        return Ok(Value::from(f));
    }
    if let Ok(s) = obj.extract::<String>() {
        return Ok(Value::String(s));
    }
    Err(PyValueError::new_err("generator parameters must be numbers, strings or None"))
}

/// Exact mad as `(num, den, witness_vertices)`.
#[pyfunction]
#[pyo3(signature = (edges, n=None))]
fn mad(edges: Vec<(usize, usize)>, n: Option<usize>) -> PyResult<(i64, i64, Vec<usize>)> {
    let g = build_graph(&edges, n).map_err(err)?;
    let w = mad_with_witness(&g).map_err(err)?;
    Ok((*w.mad.numer(), *w.mad.denom(), w.vertices))
}

/// Decides whether a cycle (or path) of length at least mad + k exists.
#[pyfunction]
#[pyo3(signature = (edges, k, n=None, mode="strict", path=false, seed=0, budget=2000, trials=None, jobs=1, trace=false))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    edges: Vec<(usize, usize)>,
    k: usize,
    n: Option<usize>,
    mode: &str,
    path: bool,
    seed: u64,
    budget: u64,
    trials: Option<u64>,
    jobs: usize,
    trace: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let g = build_graph(&edges, n).map_err(err)?;
    let opts = SolveOptions {
        mode: parse_mode(mode).map_err(err)?,
        path,
        seed,
        budget,
        trials,
        jobs: jobs.max(1),
        trace,
        ..SolveOptions::default()
    };
    let r = py.detach(|| solve_graph(&g, k, &opts)).map_err(err)?;
    let v = serde_json::to_value(&r).map_err(err)?;
    to_py(py, &v)
}

/// True when `cycle` is a simple cycle of `edges` with at least `min_len` vertices.
#[pyfunction]
#[pyo3(signature = (edges, cycle, min_len=3, n=None))]
fn verify_cycle(edges: Vec<(usize, usize)>, cycle: Vec<usize>, min_len: usize, n: Option<usize>) -> PyResult<bool> {
    let g = build_graph(&edges, n).map_err(err)?;
    Ok(CycleCertificate::new(cycle, min_len).verify(&g).is_ok())
}

/// Circumference and one longest cycle, by exhaustive search.
#[pyfunction]
#[pyo3(signature = (edges, n=None))]
fn oracle_longest_cycle(edges: Vec<(usize, usize)>, n: Option<usize>) -> PyResult<(usize, Option<Vec<usize>>)> {
    let g = build_graph(&edges, n).map_err(err)?;
    let (len, c) = longcycle::oracle::oracle_longest_cycle(&g).map_err(err)?;
    Ok((len, c.map(|c| c.vertices)))
}

/// Parses edgelist or DIMACS text into `(n, edges)`.
#[pyfunction]
#[pyo3(signature = (text, format="edgelist"))]
fn parse(text: &str, format: &str) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let g = parse_graph(text.as_bytes(), parse_format(format).map_err(err)?).map_err(err)?;
    Ok((g.n(), g.edges()))
}

/// The hardness transform, as `(n, edges)`.
#[pyfunction]
#[pyo3(signature = (edges, n=None))]
fn gadget(edges: Vec<(usize, usize)>, n: Option<usize>) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let g = build_graph(&edges, n).map_err(err)?;
    let gp = gen_hardness_gadget(&g).map_err(err)?;
    Ok((gp.n(), gp.edges()))
}

type Generated<'py> = (usize, Vec<(usize, usize)>, Bound<'py, PyAny>);

/// Generates an instance: `generate("gnp2c", seed=1, n=10, prob=0.5)` returns `(n, edges, meta)`.
#[pyfunction]
#[pyo3(signature = (family, seed=0, **params))]
fn generate<'py>(py: Python<'py>, family: &str, seed: u64, params: Option<&Bound<'py, PyDict>>) -> PyResult<Generated<'py>> {
    let mut obj = serde_json::Map::new();
    obj.insert("family".into(), Value::String(family.into()));
    if let Some(params) = params {
        for (k, v) in params.iter() {
            obj.insert(k.extract::<String>()?, from_py(&v)?);
        }
    }
    let fam: Family = serde_json::from_value(Value::Object(obj)).map_err(err)?;
    let inst = gen_instance(&fam, seed).map_err(err)?;
    let meta = serde_json::to_value(&inst.meta).map_err(err)?;
    Ok((inst.graph.n(), inst.graph.edges(), to_py(py, &meta)?))
}

#[pymodule]
#[pyo3(name = "longcycle")]
fn longcycle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(mad, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_longest_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_size_inferred_or_given() {
        assert_eq!(build_graph(&[(0, 1), (1, 4)], None).unwrap().n(), 5);
        assert_eq!(build_graph(&[(0, 1)], Some(7)).unwrap().n(), 7);
        assert!(build_graph(&[(0, 3)], Some(2)).is_err());
        assert_eq!(build_graph(&[], None).unwrap().n(), 0);
    }

    #[test]
    fn option_strings() {
        assert_eq!(parse_mode("relaxed").unwrap(), Mode::Relaxed);
        assert!(parse_mode("loose").is_err());
        assert!(matches!(parse_format("dimacs"), Ok(Format::Dimacs)));
        assert!(parse_format("graphml").is_err());
    }
}
