//! Python bindings: points, triangles, t-radian conversions, taxicab trig
//! and parallax.
//!
//! Angles cross the boundary as plain floats (t-radians or radians as the
//! function name says). Library errors become `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use taxicab::parallax::{
    choose_move_direction, euclidean_parallax_perpendicular, simulate_observation,
};
use taxicab::triangle::{classify_congruence_with_tolerance, is_congruent_with_tolerance};
use taxicab::trig::{cos_sum_detailed, sin_sum_detailed, SumKind};
use taxicab::{
    EuclideanAngle, EuclideanLength, GeometryError, MoveDirection, TaxicabLength, Vector, EPSILON,
};

fn err(e: GeometryError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Point", module = "taxicab_geometry", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyPoint(taxicab::Point);

#[pymethods]
impl PyPoint {
    #[new]
    fn new(x: f64, y: f64) -> PyResult<Self> {
        taxicab::Point::new(x, y).map(PyPoint).map_err(err)
    }

    #[getter]
    fn x(&self) -> f64 {
        self.0.x()
    }

    #[getter]
    fn y(&self) -> f64 {
        self.0.y()
    }

    fn __repr__(&self) -> String {
        format!("Point({}, {})", self.0.x(), self.0.y())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "Triangle", module = "taxicab_geometry", frozen)]
struct PyTriangle(taxicab::Triangle);

#[pymethods]
impl PyTriangle {
    #[new]
    fn new(a: PyPoint, b: PyPoint, c: PyPoint) -> PyResult<Self> {
        taxicab::Triangle::new(a.0, b.0, c.0)
            .map(PyTriangle)
            .map_err(err)
    }

    /// Build from `[x1, y1, x2, y2, x3, y3]`.
    #[staticmethod]
    fn from_coords(coords: [f64; 6]) -> PyResult<Self> {
        taxicab::Triangle::from_coords(coords)
            .map(PyTriangle)
            .map_err(err)
    }

    fn vertices(&self) -> Vec<PyPoint> {
        self.0.vertices().iter().copied().map(PyPoint).collect()
    }

    /// Taxicab side lengths opposite each vertex.
    fn sides(&self) -> [f64; 3] {
        taxicab::measure(&self.0).side_values()
    }

    /// t-radian angles at each vertex.
    fn angles(&self) -> [f64; 3] {
        taxicab::measure(&self.0).angle_values()
    }

    fn angle_sum(&self) -> f64 {
        taxicab::angle_sum(&self.0).t()
    }

    fn __repr__(&self) -> String {
        format!("Triangle({})", self.0)
    }
}

#[pyfunction]
fn taxicab_distance(p: PyPoint, q: PyPoint) -> f64 {
    taxicab::taxicab_distance(p.0, q.0).value()
}

#[pyfunction]
fn euclidean_distance(p: PyPoint, q: PyPoint) -> f64 {
    taxicab::euclidean_distance(p.0, q.0).value()
}

#[pyfunction]
fn point_on_taxicab_circle(center: PyPoint, r: f64, theta: f64) -> PyResult<PyPoint> {
    let r = TaxicabLength::new(r).map_err(err)?;
    Ok(PyPoint(taxicab::point_on_taxicab_circle(
        center.0,
        r,
        theta.into(),
    )))
}

/// t-radian measure of an acute angle `phi` (radians) in standard position.
#[pyfunction]
fn taxicab_measure_standard(phi: f64) -> PyResult<f64> {
    taxicab::taxicab_measure_standard(phi.into())
        .map(|t| t.t())
        .map_err(err)
}

#[pyfunction]
fn euclidean_measure_standard(theta: f64) -> PyResult<f64> {
    taxicab::euclidean_measure_standard(theta.into())
        .map(|a| a.rad())
        .map_err(err)
}

#[pyfunction]
fn taxicab_measure_in_quadrant(phi: f64, psi: f64) -> PyResult<f64> {
    taxicab::taxicab_measure_in_quadrant(phi.into(), psi.into())
        .map(|t| t.t())
        .map_err(err)
}

#[pyfunction]
fn direction_arc_position(dx: f64, dy: f64) -> PyResult<f64> {
    let v = Vector::new(dx, dy).map_err(err)?;
    taxicab::direction_arc_position(v)
        .map(|t| t.t())
        .map_err(err)
}

#[pyfunction]
fn angle_between(vertex: PyPoint, p: PyPoint, q: PyPoint) -> PyResult<f64> {
    taxicab::angle_between(vertex.0, p.0, q.0)
        .map(|t| t.t())
        .map_err(err)
}

#[pyfunction]
fn arc_length(r: f64, theta: f64) -> PyResult<f64> {
    let r = TaxicabLength::new(r).map_err(err)?;
    taxicab::arc_length(r, theta.into())
        .map(|s| s.value())
        .map_err(err)
}

#[pyfunction]
fn cos_t(theta: f64) -> f64 {
    taxicab::cos_t(theta)
}

#[pyfunction]
fn sin_t(theta: f64) -> f64 {
    taxicab::sin_t(theta)
}

/// "I", "II", "III" or "IV".
#[pyfunction]
fn quadrant_of(theta: f64) -> String {
    taxicab::quadrant_of(theta).to_string()
}

#[pyfunction]
fn cos_sum(alpha: f64, beta: f64) -> f64 {
    taxicab::cos_sum(alpha, beta)
}

#[pyfunction]
fn sin_sum(alpha: f64, beta: f64) -> f64 {
    taxicab::sin_sum(alpha, beta)
}

/// `(value, formula)` for the table row used by the cosine sum.
#[pyfunction]
fn cos_sum_formula(alpha: f64, beta: f64) -> (f64, String) {
    let e = cos_sum_detailed(alpha, beta);
    (e.value, e.formula(SumKind::Cos))
}

#[pyfunction]
fn sin_sum_formula(alpha: f64, beta: f64) -> (f64, String) {
    let e = sin_sum_detailed(alpha, beta);
    (e.value, e.formula(SumKind::Sin))
}

#[pyfunction]
fn cos_double(alpha: f64) -> f64 {
    taxicab::cos_double(alpha)
}

#[pyfunction]
fn sin_double(alpha: f64) -> f64 {
    taxicab::sin_double(alpha)
}

/// Congruence flags keyed by condition name ("SSS", ..., "SASAS").
#[pyfunction]
#[pyo3(signature = (t1, t2, tolerance = EPSILON))]
fn classify_congruence<'py>(
    py: Python<'py>,
    t1: &PyTriangle,
    t2: &PyTriangle,
    tolerance: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let flags = PyDict::new(py);
    for (condition, holds) in classify_congruence_with_tolerance(&t1.0, &t2.0, tolerance).iter() {
        flags.set_item(condition.name(), holds)?;
    }
    Ok(flags)
}

#[pyfunction]
#[pyo3(signature = (t1, t2, tolerance = EPSILON))]
fn is_congruent(t1: &PyTriangle, t2: &PyTriangle, tolerance: f64) -> bool {
    is_congruent_with_tolerance(&t1.0, &t2.0, tolerance)
}

#[pyfunction]
fn taxicab_parallax_distance(s: f64, alpha: f64, beta: f64) -> PyResult<f64> {
    let m = taxicab::ParallaxMeasurement {
        s: TaxicabLength::new(s).map_err(err)?,
        alpha: alpha.into(),
        beta: beta.into(),
    };
    taxicab::taxicab_parallax_distance(&m)
        .map(|d| d.value())
        .map_err(err)
}

#[pyfunction]
fn euclidean_parallax_exact(s_e: f64, alpha_e: f64, beta_e: f64, theta_e: f64) -> PyResult<f64> {
    let m = taxicab::EuclideanParallaxMeasurement {
        s_e: EuclideanLength::new(s_e).map_err(err)?,
        alpha_e: alpha_e.into(),
        beta_e: beta_e.into(),
        theta_e: theta_e.into(),
    };
    taxicab::euclidean_parallax_exact(&m)
        .map(|d| d.value())
        .map_err(err)
}

#[pyfunction]
fn euclidean_parallax_perp(s_e: f64, alpha_e: f64, beta_e: f64) -> PyResult<f64> {
    let s_e = EuclideanLength::new(s_e).map_err(err)?;
    euclidean_parallax_perpendicular(s_e, alpha_e.into(), beta_e.into())
        .map(|d| d.value())
        .map_err(err)
}

#[pyfunction]
fn euclidean_parallax_approx(s_e: f64, alpha_e: f64, beta_e: f64) -> PyResult<f64> {
    let s_e = EuclideanLength::new(s_e).map_err(err)?;
    taxicab::euclidean_parallax_approx(s_e, alpha_e.into(), beta_e.into())
        .map(|d| d.value())
        .map_err(err)
}

/// Sight `object` from `observer` and again after a diagonal move of
/// taxicab length `step`. Returns `(alpha, beta, direction)`.
///
/// `reference` (radians) defaults to the line of sight; `direction` (NW, NE,
/// SW, SE) defaults to the distance-preserving move that increases the angle.
#[pyfunction]
#[pyo3(signature = (observer, object, step, reference = None, direction = None))]
fn simulate(
    observer: PyPoint,
    object: PyPoint,
    step: f64,
    reference: Option<f64>,
    direction: Option<&str>,
) -> PyResult<(f64, f64, String)> {
    let step = TaxicabLength::new(step).map_err(err)?;
    let reference = match reference {
        Some(r) => EuclideanAngle::new(r),
        None => {
            let sight = object.0 - observer.0;
            if sight.is_zero() {
                return Err(err(GeometryError::CoincidentPoints));
            }
            EuclideanAngle::new(sight.atan2())
        }
    };
    let direction = match direction {
        Some(d) => d.parse::<MoveDirection>().map_err(err)?,
        None => choose_move_direction(observer.0, object.0, step, reference).map_err(err)?,
    };
    let scene = taxicab::ParallaxScene::new(observer.0, object.0, step, direction);
    let m = simulate_observation(&scene, reference).map_err(err)?;
    Ok((m.alpha.t(), m.beta.t(), direction.to_string()))
}

#[pymodule]
fn taxicab_geometry(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoint>()?;
    m.add_class::<PyTriangle>()?;
    m.add_function(wrap_pyfunction!(taxicab_distance, m)?)?;
    m.add_function(wrap_pyfunction!(euclidean_distance, m)?)?;
    m.add_function(wrap_pyfunction!(point_on_taxicab_circle, m)?)?;
    m.add_function(wrap_pyfunction!(taxicab_measure_standard, m)?)?;
    m.add_function(wrap_pyfunction!(euclidean_measure_standard, m)?)?;
    m.add_function(wrap_pyfunction!(taxicab_measure_in_quadrant, m)?)?;
    m.add_function(wrap_pyfunction!(direction_arc_position, m)?)?;
    m.add_function(wrap_pyfunction!(angle_between, m)?)?;
    m.add_function(wrap_pyfunction!(arc_length, m)?)?;
    m.add_function(wrap_pyfunction!(cos_t, m)?)?;
    m.add_function(wrap_pyfunction!(sin_t, m)?)?;
    m.add_function(wrap_pyfunction!(quadrant_of, m)?)?;
    m.add_function(wrap_pyfunction!(cos_sum, m)?)?;
    m.add_function(wrap_pyfunction!(sin_sum, m)?)?;
    m.add_function(wrap_pyfunction!(cos_sum_formula, m)?)?;
    m.add_function(wrap_pyfunction!(sin_sum_formula, m)?)?;
    m.add_function(wrap_pyfunction!(cos_double, m)?)?;
    m.add_function(wrap_pyfunction!(sin_double, m)?)?;
    m.add_function(wrap_pyfunction!(classify_congruence, m)?)?;
    m.add_function(wrap_pyfunction!(is_congruent, m)?)?;
    m.add_function(wrap_pyfunction!(taxicab_parallax_distance, m)?)?;
    m.add_function(wrap_pyfunction!(euclidean_parallax_exact, m)?)?;
    m.add_function(wrap_pyfunction!(euclidean_parallax_perp, m)?)?;
    m.add_function(wrap_pyfunction!(euclidean_parallax_approx, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    Ok(())
}
