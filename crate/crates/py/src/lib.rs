//! Python bindings: `import octa`.
//!
//! Coordinates cross the boundary as `fractions.Fraction` on the way out and
//! as `int`, `Fraction` or rational strings (`"p/q"`, exact decimals) on the
//! way in.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use octa_core::geom::{parse_rat, Point, Rat};
use octa_core::subdivide::{schlegel_24cell_reference, subdivide_tetrahedron, TetraFlag};
use octa_core::{fixtures, io, CrossPolytopalComplex, Error, SimplicialPolytope, ValidationLevel};

create_exception!(octa, OctaError, PyException);
create_exception!(octa, ParseError, OctaError);
create_exception!(octa, NotBalanced, OctaError);
create_exception!(octa, SearchExhausted, OctaError);
create_exception!(octa, CertificationFailed, OctaError);

fn to_py_err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Parse { .. } => ParseError::new_err(msg),
        Error::NotBalanced(_) | Error::MatchingFailure(_) => NotBalanced::new_err(msg),
        Error::SearchExhausted { .. } => SearchExhausted::new_err(msg),
        Error::CellCertificationFailed(_) => CertificationFailed::new_err(msg),
        _ => OctaError::new_err(msg),
    }
}

/// Parses one coordinate from its textual form (`str(x)` of an int, a
/// `Fraction` or a string).
pub fn rat_from_text(text: &str) -> Result<Rat, String> {
    parse_rat(text.trim()).map_err(|e| e.to_string())
}

pub fn point_from_texts(texts: &[String]) -> Result<Point, String> {
    if texts.len() != 3 {
        return Err(format!("expected 3 coordinates, got {}", texts.len()));
    }
    Ok(Point::new(
        rat_from_text(&texts[0])?,
        rat_from_text(&texts[1])?,
        rat_from_text(&texts[2])?,
    ))
}

fn extract_point(obj: &Bound<'_, PyAny>) -> PyResult<Point> {
    let coords: Vec<Bound<'_, PyAny>> = obj.extract()?;
    let texts = coords
        .iter()
        .map(|c| Ok(c.str()?.to_string()))
        .collect::<PyResult<Vec<_>>>()?;
    point_from_texts(&texts).map_err(ParseError::new_err)
}

fn fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

type Triple<'py> = (Bound<'py, PyAny>, Bound<'py, PyAny>, Bound<'py, PyAny>);

fn point_tuple<'py>(py: Python<'py>, p: &Point) -> PyResult<Triple<'py>> {
    Ok((fraction(py, &p.x)?, fraction(py, &p.y)?, fraction(py, &p.z)?))
}

fn level(name: &str) -> PyResult<ValidationLevel> {
    name.parse().map_err(|e: String| OctaError::new_err(e))
}

/// A convex simplicial 3-polytope with exact rational vertices.
#[pyclass(name = "Polytope", frozen)]
struct PyPolytope {
    inner: SimplicialPolytope,
}

#[pymethods]
impl PyPolytope {
    #[new]
    fn new(vertices: Vec<Bound<'_, PyAny>>, facets: Vec<[usize; 3]>) -> PyResult<Self> {
        let pts = vertices.iter().map(extract_point).collect::<PyResult<Vec<_>>>()?;
        SimplicialPolytope::new(pts, facets)
            .map(|inner| PyPolytope { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn from_off(text: &str) -> PyResult<Self> {
        io::parse_off(text).map(|inner| PyPolytope { inner }).map_err(to_py_err)
    }

    #[staticmethod]
    fn octahedron() -> Self {
        PyPolytope {
            inner: fixtures::octahedron(),
        }
    }

    #[staticmethod]
    fn tetrahedron() -> Self {
        PyPolytope {
            inner: fixtures::tetrahedron(),
        }
    }

    #[staticmethod]
    fn icosahedron() -> Self {
        PyPolytope {
            inner: fixtures::icosahedron(),
        }
    }

    /// Bipyramid over a regular `2k`-gon.
    #[staticmethod]
    fn bipyramid(k: usize) -> PyResult<Self> {
        if k < 2 {
            return Err(OctaError::new_err("bipyramid needs k >= 2"));
        }
        Ok(PyPolytope {
            inner: fixtures::bipyramid(k),
        })
    }

    fn to_off(&self) -> String {
        io::write_off(&self.inner)
    }

    #[getter]
    fn vertices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Triple<'py>>> {
        self.inner.vertices().iter().map(|p| point_tuple(py, p)).collect()
    }

    #[getter]
    fn facets(&self) -> Vec<[usize; 3]> {
        self.inner.facets().to_vec()
    }

    #[getter]
    fn f_vector(&self) -> [usize; 3] {
        self.inner.f_vector()
    }

    fn volume<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.volume())
    }

    /// Colors `1..=3` per vertex; raises `NotBalanced` if none exists.
    fn three_color(&self) -> PyResult<Vec<u8>> {
        octa_core::three_color(&self.inner)
            .map(|c| c.colors().to_vec())
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        let [f0, f1, f2] = self.inner.f_vector();
        format!("Polytope(f_vector=({f0}, {f1}, {f2}))")
    }
}

/// A complex of octahedral cells over a shared vertex pool.
#[pyclass(name = "Complex", frozen)]
struct PyComplex {
    inner: CrossPolytopalComplex,
}

#[pymethods]
impl PyComplex {
    #[staticmethod]
    fn from_xpc(text: &str) -> PyResult<Self> {
        io::parse_xpc(text).map(|inner| PyComplex { inner }).map_err(to_py_err)
    }

    fn to_xpc(&self) -> String {
        io::write_xpc(&self.inner)
    }

    fn to_obj(&self) -> String {
        io::write_obj(&self.inner)
    }

    #[getter]
    fn vertices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Triple<'py>>> {
        self.inner.vertices().iter().map(|p| point_tuple(py, p)).collect()
    }

    /// Cells as 6-tuples in pairing order `(a, a', b, b', c, c')`.
    #[getter]
    fn cells(&self) -> Vec<[usize; 6]> {
        self.inner.cells().iter().map(|c| c.verts).collect()
    }

    #[getter]
    fn boundary(&self) -> Vec<[usize; 3]> {
        self.inner.boundary().to_vec()
    }

    #[getter]
    fn f_vector(&self) -> [usize; 4] {
        self.inner.f_vector()
    }

    #[getter]
    fn type_census(&self) -> [usize; 4] {
        self.inner.type_census()
    }

    fn total_volume<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.total_volume())
    }

    /// Runs the verifier; returns `(name, passed, detail)` per check.
    #[pyo3(signature = (against=None, level="fast"))]
    fn verify(&self, against: Option<&PyPolytope>, level: &str) -> PyResult<Vec<(String, bool, String)>> {
        let report = octa_core::verify_complex(&self.inner, against.map(|p| &p.inner), self::level(level)?);
        Ok(report
            .checks
            .into_iter()
            .map(|c| (c.name, c.passed, c.detail))
            .collect())
    }

    fn __len__(&self) -> usize {
        self.inner.cells().len()
    }

    fn __repr__(&self) -> String {
        let [f0, f1, f2, f3] = self.inner.f_vector();
        format!("Complex(f_vector=({f0}, {f1}, {f2}, {f3}))")
    }
}

/// Subdivides a balanced polytope into `23 (f0 - 2)` octahedra.
#[pyfunction]
fn octahedralize(py: Python<'_>, polytope: &PyPolytope) -> PyResult<PyComplex> {
    py.detach(|| octa_core::octahedralize(&polytope.inner))
        .map(|inner| PyComplex { inner })
        .map_err(to_py_err)
}

/// The 23-cell reference block in the regular octahedron.
#[pyfunction]
fn schlegel24() -> PyResult<PyComplex> {
    schlegel_24cell_reference()
        .and_then(|r| r.block.complex())
        .map(|inner| PyComplex { inner })
        .map_err(to_py_err)
}

/// 23 octahedra subdividing a tetrahedron (the unit one by default).
#[pyfunction]
#[pyo3(signature = (vertices=None))]
fn tetra23(vertices: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<PyComplex> {
    let pts = match vertices {
        None => fixtures::unit_tetrahedron_points(),
        Some(v) => {
            let pts = v.iter().map(extract_point).collect::<PyResult<Vec<_>>>()?;
            pts.try_into()
                .map_err(|_| OctaError::new_err("a tetrahedron needs exactly 4 vertices"))?
        }
    };
    subdivide_tetrahedron(&pts, TetraFlag::default())
        .map(|inner| PyComplex { inner })
        .map_err(to_py_err)
}

/// Whether six points with the given antipodal pairing span a convex
/// octahedron with exactly that pairing.
#[pyfunction]
#[pyo3(signature = (points, pairs=[(0, 1), (2, 3), (4, 5)]))]
fn is_cross_polytope(points: Vec<Bound<'_, PyAny>>, pairs: [(usize, usize); 3]) -> PyResult<bool> {
    let pts = points.iter().map(extract_point).collect::<PyResult<Vec<_>>>()?;
    let pts: [Point; 6] = pts
        .try_into()
        .map_err(|_| OctaError::new_err("expected exactly 6 points"))?;
    Ok(octa_core::is_cross_polytope(&pts, pairs))
}

#[pymodule]
fn octa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyPolytope>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(octahedralize, m)?)?;
    m.add_function(wrap_pyfunction!(schlegel24, m)?)?;
    m.add_function(wrap_pyfunction!(tetra23, m)?)?;
    m.add_function(wrap_pyfunction!(is_cross_polytope, m)?)?;
    m.add("OctaError", py.get_type::<OctaError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("NotBalanced", py.get_type::<NotBalanced>())?;
    m.add("SearchExhausted", py.get_type::<SearchExhausted>())?;
    m.add("CertificationFailed", py.get_type::<CertificationFailed>())?;
    Ok(())
}
