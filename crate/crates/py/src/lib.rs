//! Python bindings.

use nsfam::classenum::{enumerate_classes, EnumQuery};
use nsfam::exactmath::text::format_poly;
use nsfam::families::{
    analyze_surface_with, compose_maps, find_families_on, inverse_stereographic, AnalysisOptions, FamilyQuery,
};
use nsfam::json::{families_to_json, map_input, surface_to_json, MapFile};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(pynsfam, NsfamError, PyException);

fn err(e: nsfam::Error) -> PyErr {
    NsfamError::new_err(e.to_string())
}

/// A divisor class `c0 e0 + c1 e1 + ...`.
#[pyclass(name = "DivClass", eq, hash, frozen, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDivClass(nsfam::nslattice::DivClass);

#[pymethods]
impl PyDivClass {
    #[new]
    fn new(coeffs: Vec<i64>) -> Self {
        PyDivClass(nsfam::nslattice::DivClass(coeffs))
    }

    /// Parses `2e0-e1-e2` or `[2,-1,-1]`.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(PyDivClass).map_err(err)
    }

    #[getter]
    fn coeffs(&self) -> Vec<i64> {
        self.0 .0.clone()
    }

    fn self_intersection(&self) -> i64 {
        self.0.self_intersection()
    }

    fn intersect(&self, other: &PyDivClass) -> PyResult<i64> {
        nsfam::nslattice::intersect(&self.0, &other.0).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DivClass({:?})", self.0 .0)
    }
}

/// A rational map of the plane given by homogeneous forms.
#[pyclass(name = "RationalMap", frozen, from_py_object)]
#[derive(Clone)]
struct PyRationalMap {
    map: nsfam::families::RationalMap,
    names: Vec<String>,
}

#[pymethods]
impl PyRationalMap {
    #[new]
    #[pyo3(signature = (components, variables=None, minpoly=None))]
    fn new(components: Vec<String>, variables: Option<Vec<String>>, minpoly: Option<String>) -> PyResult<Self> {
        let input = map_input(&MapFile { variables, map: components, minpoly, basepoints: None }).map_err(err)?;
        Ok(PyRationalMap { map: input.map, names: input.names })
    }

    /// Reads a JSON map file.
    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let input = nsfam::json::parse_map_file(std::path::Path::new(path)).map_err(err)?;
        Ok(PyRationalMap { map: input.map, names: input.names })
    }

    #[getter]
    fn components(&self) -> Vec<String> {
        self.map.components.iter().map(|c| format_poly(c, &self.names)).collect()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.map.degree()
    }

    /// This map followed by inverse stereographic projection onto the sphere.
    fn to_sphere(&self) -> PyResult<Self> {
        let n = self.map.components.len() - 1;
        let map = compose_maps(&inverse_stereographic(n).map_err(err)?, &self.map).map_err(err)?;
        Ok(PyRationalMap { map, names: self.names.clone() })
    }
}

/// One accepted family.
#[pyclass(name = "Family", frozen, get_all, skip_from_py_object)]
struct PyFamily {
    cls: PyDivClass,
    degree: i64,
    dimension: i64,
    genus: i64,
    series: Option<Vec<String>>,
    reachable: bool,
}

#[pymethods]
impl PyFamily {
    fn __repr__(&self) -> String {
        format!("Family({}, dimension={})", self.cls.0, self.dimension)
    }
}

/// Base locus and lattice of the surface parametrized by a map.
#[pyclass(name = "Surface", frozen, skip_from_py_object)]
struct PySurface {
    surface: nsfam::families::Surface,
    names: Vec<String>,
}

#[pymethods]
impl PySurface {
    #[staticmethod]
    #[pyo3(signature = (map, depth_cap=8, seed=None))]
    fn analyze(map: &PyRationalMap, depth_cap: usize, seed: Option<u64>) -> PyResult<Self> {
        let opts = AnalysisOptions { depth_cap, seed: seed.unwrap_or(nsfam::linser::DEFAULT_SEED) };
        let surface = analyze_surface_with(&map.map, opts).map_err(err)?;
        Ok(PySurface { surface, names: map.names.clone() })
    }

    #[getter]
    fn h(&self) -> PyDivClass {
        PyDivClass(self.surface.lattice.h.clone())
    }

    #[getter]
    fn k(&self) -> PyDivClass {
        PyDivClass(self.surface.lattice.k.clone())
    }

    #[getter]
    fn sigma(&self) -> Vec<usize> {
        self.surface.lattice.sigma.clone()
    }

    /// Minimal polynomial of the coordinate field, if not the rationals.
    #[getter]
    fn field(&self) -> Option<String> {
        self.surface.locus.field.minpoly_string()
    }

    fn genus(&self, c: &PyDivClass) -> PyResult<i64> {
        self.surface.lattice.genus(&c.0).map_err(err)
    }

    /// The lattice report as JSON.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&surface_to_json(&self.surface)).map_err(|e| err(e.into()))
    }

    /// Accepted families of degree `alpha`, `h0 = nu` and genus `rho`.
    #[pyo3(signature = (alpha, nu, rho, real=false))]
    fn families(&self, alpha: i64, nu: i64, rho: i64, real: bool) -> PyResult<Vec<PyFamily>> {
        let mut q = FamilyQuery::new(alpha, nu, rho).map_err(err)?;
        q.real_only = real;
        let out = find_families_on(&self.surface, &q, nsfam::linser::DEFAULT_DEPTH_CAP).map_err(err)?;
        Ok(out
            .accepted
            .into_iter()
            .map(|f| PyFamily {
                cls: PyDivClass(f.cls),
                degree: f.degree,
                dimension: f.dimension,
                genus: f.genus,
                series: f.series.map(|s| s.basis.iter().map(|b| format_poly(b, &self.names)).collect()),
                reachable: f.reachable,
            })
            .collect())
    }

    /// Full report with rejections, as JSON.
    #[pyo3(signature = (alpha, nu, rho, real=false))]
    fn families_json(&self, alpha: i64, nu: i64, rho: i64, real: bool) -> PyResult<String> {
        let mut q = FamilyQuery::new(alpha, nu, rho).map_err(err)?;
        q.real_only = real;
        let out = find_families_on(&self.surface, &q, nsfam::linser::DEFAULT_DEPTH_CAP).map_err(err)?;
        let doc = families_to_json(&self.surface, &out, &self.names, None);
        serde_json::to_string(&doc).map_err(|e| err(e.into()))
    }
}

/// Classes `c` with `h.c = alpha` and `c^2 = beta`.
#[pyfunction]
fn classes(h: &PyDivClass, alpha: i64, beta: i64) -> PyResult<Vec<PyDivClass>> {
    let q = EnumQuery::new(h.0.clone(), alpha, beta).map_err(err)?;
    Ok(enumerate_classes(&q).map_err(err)?.into_iter().map(PyDivClass).collect())
}

#[pymodule]
pub fn pynsfam(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDivClass>()?;
    m.add_class::<PyRationalMap>()?;
    m.add_class::<PySurface>()?;
    m.add_class::<PyFamily>()?;
    m.add_function(wrap_pyfunction!(classes, m)?)?;
    m.add("NsfamError", m.py().get_type::<NsfamError>())?;
    Ok(())
}
