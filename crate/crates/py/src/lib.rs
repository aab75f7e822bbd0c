//! Python bindings: `import pymaniplex`.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use maniplex::dot::maniplex_dot;
use maniplex::{builders, constructions, symmetry, ColoringOutcome, RootedManiplex};

fn err(e: maniplex::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A flag graph: `rows[f][i]` is the `i`-adjacent flag of `f`.
#[pyclass(name = "Maniplex", module = "pymaniplex", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyManiplex(maniplex::Maniplex);

#[pymethods]
impl PyManiplex {
    #[new]
    #[pyo3(signature = (rank, rows, name = None))]
    fn new(rank: usize, rows: Vec<Vec<usize>>, name: Option<String>) -> PyResult<Self> {
        let mut m = maniplex::Maniplex::new(rank, rows).map_err(err)?;
        m.set_name(name);
        Ok(Self(m))
    }

    #[staticmethod]
    fn from_mpx(text: &str) -> PyResult<Self> {
        maniplex::read_mpx(text).map(Self).map_err(err)
    }

    fn to_mpx(&self) -> String {
        maniplex::write_mpx(&self.0)
    }

    fn to_dot(&self) -> String {
        maniplex_dot(&self.0)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn flag_count(&self) -> usize {
        self.0.flag_count()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.0.name().map(str::to_string)
    }

    fn adj(&self, flag: usize, color: usize) -> PyResult<usize> {
        if flag >= self.0.flag_count() || color >= self.0.rank() {
            return Err(PyIndexError::new_err(format!("no flag {flag} or color {color}")));
        }
        Ok(self.0.adj(flag, color))
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.0.flag_count()).map(|f| self.0.row(f).to_vec()).collect()
    }

    fn face_census(&self) -> Vec<usize> {
        self.0.face_census()
    }

    /// Flag sets of the `i`-faces, ordered by smallest flag.
    fn faces(&self, i: usize) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.0.faces(i).map_err(err)?.into_iter().map(|f| f.flags).collect())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_maniplex(&self) -> bool {
        self.0.is_maniplex()
    }

    fn is_polytope(&self) -> bool {
        self.0.is_polytope()
    }

    /// `None` for a polytope, otherwise a description of the failure.
    fn polytope_witness(&self) -> Option<String> {
        self.0.check_polytope().err().map(|v| v.to_string())
    }

    fn is_flat(&self, i: usize, j: usize) -> PyResult<bool> {
        self.0.is_flat(i, j).map_err(err)
    }

    fn is_facet_bipartite(&self) -> bool {
        self.0.is_facet_bipartite()
    }

    fn is_vertex_bipartite(&self) -> bool {
        self.0.is_vertex_bipartite()
    }

    /// `(node_count, edges)` of the facet graph.
    fn facet_graph(&self) -> PyResult<(usize, Vec<(usize, usize)>)> {
        let fg = self.0.facet_graph().map_err(err)?;
        Ok((fg.graph.node_count(), fg.graph.edges().collect()))
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn automorphism_group_order(&self) -> PyResult<usize> {
        Ok(symmetry::automorphism_group(&self.0).map_err(err)?.order())
    }

    fn flag_orbit_count(&self) -> PyResult<usize> {
        Ok(symmetry::automorphism_group(&self.0).map_err(err)?.orbit_count)
    }

    fn is_regular(&self) -> PyResult<bool> {
        symmetry::is_regular(&self.0).map_err(err)
    }

    /// The symmetry type graph, one line per node.
    fn symmetry_type_graph(&self) -> PyResult<String> {
        Ok(symmetry::symmetry_type_graph(&self.0).map_err(err)?.to_string())
    }

    fn __len__(&self) -> usize {
        self.0.flag_count()
    }

    fn __repr__(&self) -> String {
        format!("<Maniplex {}>", self.0)
    }
}

/// A 1-factorization of `K_k`; nodes are `1..=k`.
#[pyclass(name = "OneFactorization", module = "pymaniplex", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFactorization(maniplex::OneFactorization);

#[pymethods]
impl PyFactorization {
    #[new]
    fn new(k: usize, factors: Vec<Vec<(usize, usize)>>) -> PyResult<Self> {
        maniplex::OneFactorization::from_pairs(k, factors).map(Self).map_err(err)
    }

    #[staticmethod]
    fn prime_case(k: usize) -> PyResult<Self> {
        maniplex::OneFactorization::prime_case(k).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_fac(text: &str) -> PyResult<Self> {
        maniplex::OneFactorization::parse(text).map(Self).map_err(err)
    }

    fn to_fac(&self) -> String {
        self.0.to_fac()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn pairs(&self) -> Vec<Vec<(usize, usize)>> {
        self.0.pairs()
    }

    fn is_perfect(&self) -> bool {
        self.0.is_perfect()
    }

    /// A pair of 1-based factor indices whose union is not Hamiltonian.
    fn imperfect_pair(&self) -> Option<(usize, usize)> {
        self.0.check_perfect().err().map(|(a, b)| (a + 1, b + 1))
    }

    fn __repr__(&self) -> String {
        format!("<OneFactorization of K_{}>", self.0.k())
    }
}

#[pyfunction]
fn point_segment() -> PyManiplex {
    PyManiplex(builders::point_segment())
}

#[pyfunction]
fn polygon(k: usize) -> PyResult<PyManiplex> {
    builders::polygon(k).map(PyManiplex).map_err(err)
}

#[pyfunction]
fn simplex(n: usize) -> PyResult<PyManiplex> {
    builders::simplex(n).map(PyManiplex).map_err(err)
}

#[pyfunction]
fn hypercube(n: usize) -> PyResult<PyManiplex> {
    builders::hypercube(n).map(PyManiplex).map_err(err)
}

#[pyfunction]
fn torus44(s: usize) -> PyResult<PyManiplex> {
    builders::torus44(s).map(PyManiplex).map_err(err)
}

#[pyfunction]
fn cuboctahedron() -> PyManiplex {
    PyManiplex(builders::cuboctahedron())
}

#[pyfunction]
fn rhombic_dodecahedron() -> PyManiplex {
    PyManiplex(builders::rhombic_dodecahedron())
}

#[pyfunction]
fn trivial_extension(p: &PyManiplex) -> PyResult<PyManiplex> {
    Ok(PyManiplex(constructions::trivial_extension(&p.0).map_err(err)?.into_maniplex()))
}

#[pyfunction]
fn flat_extension(p: &PyManiplex, k: usize) -> PyResult<PyManiplex> {
    Ok(PyManiplex(constructions::flat_extension(&p.0, k).map_err(err)?.into_maniplex()))
}

#[pyfunction]
fn iterate_extension(p: &PyManiplex, ks: Vec<usize>) -> PyResult<PyManiplex> {
    constructions::iterate_extension(&p.0, &ks).map(PyManiplex).map_err(err)
}

/// `coloring[facet]` in `1..k-1`, facets numbered as in `faces(rank - 1)`.
#[pyfunction]
fn factorization_extension(p: &PyManiplex, coloring: Vec<usize>, fac: &PyFactorization) -> PyResult<PyManiplex> {
    Ok(PyManiplex(
        constructions::factorization_extension(&p.0, &coloring, &fac.0)
            .map_err(err)?
            .into_maniplex(),
    ))
}

/// A proper `(k-1)`-coloring of the facet graph, or `None` if there is none.
#[pyfunction]
fn check_flat_extension_necessary(p: &PyManiplex, k: usize) -> PyResult<Option<Vec<usize>>> {
    match constructions::check_flat_extension_necessary(&p.0, k).map_err(err)? {
        ColoringOutcome::Colorable(c) => Ok(Some(c)),
        ColoringOutcome::NotColorable => Ok(None),
        ColoringOutcome::Undecided => Err(PyValueError::new_err("facet graph too large for exact coloring")),
    }
}

fn rooted(m: &PyManiplex, base: usize) -> PyResult<RootedManiplex> {
    RootedManiplex::new(m.0.clone(), base).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (p, q, r, base_p = 0, base_q = 0))]
fn mix(p: &PyManiplex, q: &PyManiplex, r: usize, base_p: usize, base_q: usize) -> PyResult<PyManiplex> {
    let m = constructions::mix(&rooted(p, base_p)?, &rooted(q, base_q)?, r).map_err(err)?;
    Ok(PyManiplex(m.into_maniplex()))
}

#[pyfunction]
#[pyo3(signature = (p, q, base_p = 0, base_q = 0))]
fn flat_amalgamation(p: &PyManiplex, q: &PyManiplex, base_p: usize, base_q: usize) -> PyResult<PyManiplex> {
    let m = constructions::flat_amalgamation(&rooted(p, base_p)?, &rooted(q, base_q)?).map_err(err)?;
    Ok(PyManiplex(m.into_maniplex()))
}

/// A flag bijection `a -> b`, or `None`.
#[pyfunction]
fn is_isomorphic(a: &PyManiplex, b: &PyManiplex) -> Option<Vec<usize>> {
    maniplex::is_isomorphic(&a.0, &b.0)
}

/// A covering map `q -> p`, or `None`.
#[pyfunction]
fn covers(q: &PyManiplex, p: &PyManiplex) -> PyResult<Option<Vec<usize>>> {
    maniplex::covers(&q.0, &p.0).map_err(err)
}

#[pymodule]
fn pymaniplex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyManiplex>()?;
    m.add_class::<PyFactorization>()?;
    m.add_function(wrap_pyfunction!(point_segment, m)?)?;
    m.add_function(wrap_pyfunction!(polygon, m)?)?;
    m.add_function(wrap_pyfunction!(simplex, m)?)?;
    m.add_function(wrap_pyfunction!(hypercube, m)?)?;
    m.add_function(wrap_pyfunction!(torus44, m)?)?;
    m.add_function(wrap_pyfunction!(cuboctahedron, m)?)?;
    m.add_function(wrap_pyfunction!(rhombic_dodecahedron, m)?)?;
    m.add_function(wrap_pyfunction!(trivial_extension, m)?)?;
    m.add_function(wrap_pyfunction!(flat_extension, m)?)?;
    m.add_function(wrap_pyfunction!(iterate_extension, m)?)?;
    m.add_function(wrap_pyfunction!(factorization_extension, m)?)?;
    m.add_function(wrap_pyfunction!(check_flat_extension_necessary, m)?)?;
    m.add_function(wrap_pyfunction!(mix, m)?)?;
    m.add_function(wrap_pyfunction!(flat_amalgamation, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(covers, m)?)?;
    Ok(())
}
