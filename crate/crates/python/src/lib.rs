//! Python module `monideal`: monomial ideals, weighted oriented graphs and
//! their covering polyhedra.

use std::collections::BTreeSet;

use monideal::polyhedra::{
    covering_polyhedron, integral_closure_power, is_normal_up_to, newton_vertices,
};
use monideal::wog::DEFAULT_MAX_COVER_VERTICES;
use monideal::{
    associated_primes, compare_powers, irreducible_decomposition, minimal_primes,
    symbolic_power_ass, symbolic_power_min, Error, ExponentVector, PolyLimits, RationalVector,
};
use pyo3::exceptions::{PyMemoryError, PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Consistency(_) => PyRuntimeError::new_err(e.to_string()),
        Error::ResourceLimit { .. } => PyMemoryError::new_err(e.to_string()),
        Error::Overflow => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn exponent(ideal: &monideal::MonomialIdeal, coords: Vec<u32>) -> PyResult<ExponentVector> {
    if coords.len() != ideal.nvars() {
        return Err(PyValueError::new_err(format!(
            "expected {} exponents, got {}",
            ideal.nvars(),
            coords.len()
        )));
    }
    Ok(ExponentVector::new(coords))
}

fn fractions(py: Python<'_>, v: &RationalVector) -> PyResult<Vec<PyObject>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    v.coords()
        .iter()
        .map(|q| Ok(fraction.call1((q.to_string(),))?.unbind()))
        .collect()
}

fn supports(primes: Vec<monideal::MonomialPrime>) -> Vec<Vec<usize>> {
    primes
        .into_iter()
        .map(|p| p.support().iter().copied().collect())
        .collect()
}

/// A monomial ideal, stored by its minimal generators.
#[pyclass(frozen, eq, module = "monideal")]
#[derive(Clone, PartialEq)]
struct MonomialIdeal(monideal::MonomialIdeal);

#[pymethods]
impl MonomialIdeal {
    /// Parse text such as `"t1*t2^2, t2*t3"`; `nvars` widens the ring.
    #[new]
    #[pyo3(signature = (text, nvars=None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        let ideal = match nvars {
            Some(n) => monideal::MonomialIdeal::parse_with_vars(text, n),
            None => text.parse(),
        };
        ideal.map(MonomialIdeal).map_err(to_py)
    }

    /// Build from exponent vectors of equal length.
    #[staticmethod]
    fn from_exponents(nvars: usize, gens: Vec<Vec<u32>>) -> PyResult<Self> {
        monideal::MonomialIdeal::minimalize(gens.into_iter().map(ExponentVector::new), nvars)
            .map(MonomialIdeal)
            .map_err(to_py)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    fn gens(&self) -> Vec<Vec<u32>> {
        self.0.gens().iter().map(|g| g.coords().to_vec()).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal('{}', nvars={})", self.0, self.0.nvars())
    }

    fn __contains__(&self, exponents: Vec<u32>) -> PyResult<bool> {
        let a = exponent(&self.0, exponents)?;
        self.0.contains_monomial(&a).map_err(to_py)
    }

    fn issubset(&self, other: &MonomialIdeal) -> PyResult<bool> {
        self.0.is_subset_of(&other.0).map_err(to_py)
    }

    fn power(&self, n: u32) -> PyResult<Self> {
        self.0.power(n).map(MonomialIdeal).map_err(to_py)
    }

    fn intersect(&self, other: &MonomialIdeal) -> PyResult<Self> {
        self.0.intersect(&other.0).map(MonomialIdeal).map_err(to_py)
    }

    /// Exponent vectors `alpha` of the irredundant irreducible components
    /// `(t_i^{alpha_i} : alpha_i > 0)`.
    fn irreducible_decomposition(&self) -> PyResult<Vec<Vec<u32>>> {
        let dec = irreducible_decomposition(&self.0).map_err(to_py)?;
        Ok(dec
            .components()
            .iter()
            .map(|q| q.alpha().coords().to_vec())
            .collect())
    }

    /// Associated primes as sorted lists of 1-based variable indices.
    fn associated_primes(&self) -> PyResult<Vec<Vec<usize>>> {
        associated_primes(&self.0).map(supports).map_err(to_py)
    }

    fn minimal_primes(&self) -> PyResult<Vec<Vec<usize>>> {
        minimal_primes(&self.0).map(supports).map_err(to_py)
    }

    /// `I^(n)` from the minimal primes, or `I^<n>` from the maximal
    /// associated primes when `use_minimal_primes` is false.
    #[pyo3(signature = (n, use_minimal_primes=true))]
    fn symbolic_power(&self, n: u32, use_minimal_primes: bool) -> PyResult<Self> {
        let sym = if use_minimal_primes {
            symbolic_power_min(&self.0, n)
        } else {
            symbolic_power_ass(&self.0, n)
        };
        sym.map(MonomialIdeal).map_err(to_py)
    }

    /// Dict with the power, both symbolic powers, the equalities and the
    /// generators of `I^(n)` outside `I^n`.
    fn compare_powers<'py>(&self, py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyDict>> {
        let r = compare_powers(&self.0, n).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("power", MonomialIdeal(r.power))?;
        d.set_item("symbolic_ass", MonomialIdeal(r.symbolic_ass))?;
        d.set_item("symbolic_min", MonomialIdeal(r.symbolic_min))?;
        d.set_item("equal_ass", r.equal_ass)?;
        d.set_item("equal_min", r.equal_min)?;
        let witnesses: Vec<Vec<u32>> = r.witnesses.iter().map(|w| w.coords().to_vec()).collect();
        d.set_item("witnesses", witnesses)?;
        Ok(d)
    }

    /// Vertices of the covering polyhedron as lists of `Fraction`.
    fn covering_vertices(&self, py: Python<'_>) -> PyResult<Vec<Vec<PyObject>>> {
        let p = covering_polyhedron(&self.0).map_err(to_py)?;
        let vs = p.vertex_points(&PolyLimits::default()).map_err(to_py)?;
        vs.iter().map(|v| fractions(py, v)).collect()
    }

    /// Generators that are vertices of the Newton polyhedron.
    fn newton_vertices(&self) -> PyResult<Vec<Vec<u32>>> {
        let vs = newton_vertices(&self.0, &PolyLimits::default()).map_err(to_py)?;
        Ok(vs.into_iter().map(ExponentVector::into_coords).collect())
    }

    #[pyo3(signature = (n=1))]
    fn integral_closure(&self, n: u32) -> PyResult<Self> {
        integral_closure_power(&self.0, n, &PolyLimits::default())
            .map(MonomialIdeal)
            .map_err(to_py)
    }

    /// Whether `I^n` is integrally closed for every `n <= max_n`.
    #[pyo3(signature = (max_n=3))]
    fn is_normal(&self, max_n: u32) -> PyResult<bool> {
        Ok(is_normal_up_to(&self.0, max_n, &PolyLimits::default())
            .map_err(to_py)?
            .normal)
    }
}

/// A weighted oriented graph on vertices `1..=nvertices`.
#[pyclass(frozen, module = "monideal")]
#[derive(Clone)]
struct WeightedOrientedGraph(monideal::WeightedOrientedGraph);

#[pymethods]
impl WeightedOrientedGraph {
    /// Directed `edges` as `(from, to)` pairs; weights default to 1.
    #[new]
    #[pyo3(signature = (nvertices, edges, weights=None))]
    fn new(
        nvertices: usize,
        edges: Vec<(usize, usize)>,
        weights: Option<Vec<u32>>,
    ) -> PyResult<Self> {
        let weights = weights.unwrap_or_else(|| vec![1; nvertices]);
        monideal::WeightedOrientedGraph::new(nvertices, edges, weights)
            .map(WeightedOrientedGraph)
            .map_err(to_py)
    }

    /// Parse the `vertices` / `weights` / `edge` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(WeightedOrientedGraph).map_err(to_py)
    }

    #[getter]
    fn nvertices(&self) -> usize {
        self.0.nvertices()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    #[getter]
    fn weights(&self) -> Vec<u32> {
        self.0.weights().to_vec()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "WeightedOrientedGraph({}, {:?}, {:?})",
            self.0.nvertices(),
            self.0.edges(),
            self.0.weights()
        )
    }

    fn normalize(&self) -> Self {
        WeightedOrientedGraph(self.0.normalize())
    }

    fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal(self.0.edge_ideal())
    }

    /// The Alexander dual `J(D)`.
    fn alexander_dual(&self) -> PyResult<MonomialIdeal> {
        let (_, j) = self.0.alexander_dual().map_err(to_py)?;
        Ok(MonomialIdeal(j))
    }

    fn strong_covers(&self) -> PyResult<Vec<Vec<usize>>> {
        let covers = self
            .0
            .normalize()
            .strong_covers(DEFAULT_MAX_COVER_VERTICES)
            .map_err(to_py)?;
        Ok(covers
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect())
    }

    fn is_strong_cover(&self, cover: BTreeSet<usize>) -> PyResult<bool> {
        self.0.normalize().is_strong_cover(&cover).map_err(to_py)
    }

    /// Dict of the power criteria and the graph facts behind them.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = self.0.classify().map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("square", c.square)?;
        d.set_item("all_powers", c.all_powers)?;
        d.set_item("ntf", c.ntf)?;
        d.set_item("all_vplus_sinks", c.all_vplus_sinks)?;
        d.set_item("has_triangle", c.has_triangle)?;
        d.set_item("is_bipartite", c.is_bipartite)?;
        Ok(d)
    }

    /// A monomial in `I^(2)` but not `I^2`, when a heavy vertex is not a sink.
    fn non_sink_witness(&self) -> Option<Vec<u32>> {
        self.0.non_sink_witness().map(ExponentVector::into_coords)
    }
}

#[pymodule]
#[pyo3(name = "monideal")]
fn monideal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<MonomialIdeal>()?;
    m.add_class::<WeightedOrientedGraph>()?;
    Ok(())
}
