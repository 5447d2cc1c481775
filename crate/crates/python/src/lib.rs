use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

use pga::autodiff::{DualNumber, DualScalar, Expr};
use pga::dynamics::{simulate_strided, InertiaMap, RigidBodyState};
use pga::kernel::{pga2, pga3, Algebra, Multivector};
use pga::pga3d as p3;
use pga::verify::{cayley_table, run_suite_2d, run_suite_3d, DEFAULT_SEED};
use pga::PgaError;

fn err(e: PgaError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn algebra(dim: &str) -> PyResult<Arc<Algebra>> {
    match dim {
        "2d" => Ok(pga2()),
        "3d" => Ok(pga3()),
        _ => Err(PyValueError::new_err(format!("algebra must be '2d' or '3d', got {dim:?}"))),
    }
}

fn json_to_py(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A general element of the 2D or 3D algebra.
#[pyclass(name = "Multivector", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMultivector(Multivector);

impl PyMultivector {
    fn operand(&self, other: &Bound<'_, PyAny>) -> PyResult<Multivector> {
        if let Ok(m) = other.extract::<PyRef<'_, PyMultivector>>() {
            return Ok(m.0.clone());
        }
        if let Ok(s) = other.extract::<f64>() {
            return Ok(Multivector::scalar(self.0.algebra(), s));
        }
        Err(PyTypeError::new_err("expected a Multivector or a number"))
    }
}

#[pymethods]
impl PyMultivector {
    /// Coefficients in canonical blade order for algebra `dim` ("2d" or "3d").
    #[new]
    fn new(dim: &str, coeffs: Vec<f64>) -> PyResult<Self> {
        Multivector::from_coeffs(&algebra(dim)?, coeffs).map(Self).map_err(err)
    }

    /// Build from blade names, e.g. {"e1": 2.0, "e012": -1.0}.
    #[staticmethod]
    fn named(dim: &str, terms: BTreeMap<String, f64>) -> PyResult<Self> {
        let terms: Vec<(&str, f64)> = terms.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        Multivector::from_named(&algebra(dim)?, &terms).map(Self).map_err(err)
    }

    #[getter]
    fn coeffs(&self) -> Vec<f64> {
        self.0.coeffs().to_vec()
    }

    fn terms(&self) -> Vec<(String, f64)> {
        self.0.named_terms()
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.0.grade_part(k).map(Self).map_err(err)
    }

    fn reverse(&self) -> Self {
        Self(self.0.reverse())
    }

    fn dual(&self) -> Self {
        Self(self.0.poincare_dual())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn ideal_norm(&self) -> f64 {
        self.0.ideal_norm()
    }

    /// `self * x * reverse(self)`.
    fn sandwich(&self, x: &PyMultivector) -> PyResult<Self> {
        self.0.sandwich(&x.0).map(Self).map_err(err)
    }

    fn commutator(&self, other: &PyMultivector) -> PyResult<Self> {
        self.0.commutator(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.geometric_product(&self.operand(other)?).map(Self).map_err(err)
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.operand(other)?.geometric_product(&self.0).map(Self).map_err(err)
    }

    fn __xor__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.outer_product(&self.operand(other)?).map(Self).map_err(err)
    }

    fn __or__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.inner_product(&self.operand(other)?).map(Self).map_err(err)
    }

    fn __and__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.regressive_product(&self.operand(other)?).map(Self).map_err(err)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 + &self.operand(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(&self.0 - &self.operand(other)?))
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __repr__(&self) -> String {
        let terms: Vec<String> = self.0.named_terms().iter().map(|(n, v)| format!("{v}*{n}")).collect();
        if terms.is_empty() {
            "Multivector(0)".to_owned()
        } else {
            format!("Multivector({})", terms.join(" + "))
        }
    }
}

/// Euclidean point (x, y, z) of the 3D algebra.
#[pyclass(name = "Point3", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPoint3(p3::Point3);

#[pymethods]
impl PyPoint3 {
    #[new]
    fn new(x: f64, y: f64, z: f64) -> Self {
        Self(p3::point3(x, y, z))
    }

    /// `None` for ideal points.
    fn xyz(&self) -> Option<(f64, f64, f64)> {
        self.0.xyz().map(|[x, y, z]| (x, y, z))
    }

    fn mv(&self) -> PyMultivector {
        PyMultivector(self.0.mv().clone())
    }

    fn __repr__(&self) -> String {
        match self.0.xyz() {
            Some([x, y, z]) => format!("Point3({x}, {y}, {z})"),
            None => "Point3(ideal)".to_owned(),
        }
    }
}

/// The plane `a x + b y + c z + d = 0`.
#[pyclass(name = "Plane", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPlane(p3::Plane);

#[pymethods]
impl PyPlane {
    #[new]
    fn new(a: f64, b: f64, c: f64, d: f64) -> PyResult<Self> {
        p3::plane(a, b, c, d).and_then(|p| p.normalize()).map(Self).map_err(err)
    }

    fn coords(&self) -> (f64, f64, f64, f64) {
        self.0.coords()
    }

    fn mv(&self) -> PyMultivector {
        PyMultivector(self.0.mv().clone())
    }
}

/// A line, stored as its bivector.
#[pyclass(name = "Line3", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyLine3(p3::Line3);

#[pymethods]
impl PyLine3 {
    /// Normalized line from `p` towards `q`.
    #[staticmethod]
    fn through(p: &PyPoint3, q: &PyPoint3) -> PyResult<Self> {
        p3::line_through(&p.0, &q.0)
            .require("line through")
            .and_then(|l| l.normalize())
            .map(Self)
            .map_err(err)
    }

    /// Intersection of two planes; raises for parallel planes.
    #[staticmethod]
    fn meet(a: &PyPlane, b: &PyPlane) -> PyResult<Self> {
        p3::line_meet(&a.0, &b.0).require("plane meet").map(Self).map_err(err)
    }

    /// `(direction, moment)`.
    fn plucker(&self) -> ([f64; 3], [f64; 3]) {
        self.0.plucker()
    }

    fn mv(&self) -> PyMultivector {
        PyMultivector(self.0.mv().clone())
    }
}

/// Rigid motion: an even, normalized element of the 3D algebra.
#[pyclass(name = "Motor3", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMotor3(p3::Motor3);

#[pymethods]
impl PyMotor3 {
    #[staticmethod]
    fn identity() -> Self {
        Self(p3::Pga3::new().identity_motor())
    }

    /// Rotate by `angle` about `axis` while advancing `pitch * angle` along it.
    #[staticmethod]
    #[pyo3(signature = (axis, angle, pitch = 0.0))]
    fn screw(axis: &PyLine3, angle: f64, pitch: f64) -> PyResult<Self> {
        p3::motor_from_screw(&axis.0, angle, pitch).map(Self).map_err(err)
    }

    /// Translation by the vector (x, y, z).
    #[staticmethod]
    fn translation(x: f64, y: f64, z: f64) -> PyResult<Self> {
        let d = (x * x + y * y + z * z).sqrt();
        if d == 0.0 {
            return Ok(Self::identity());
        }
        let dir = p3::direction3(x / d, y / d, z / d).map_err(err)?;
        p3::translator(&dir, d).map(Self).map_err(err)
    }

    /// `exp(B)` for bivector coordinates [b01, b02, b03, b23, b31, b12].
    #[staticmethod]
    fn exp(b: [f64; 6]) -> PyResult<Self> {
        p3::exp_bivector(&p3::bivector(b)).map(Self).map_err(err)
    }

    /// Bivector coordinates of the principal logarithm.
    fn log(&self) -> PyResult<[f64; 6]> {
        self.0.log().map(|b| p3::bivector_coords(&b)).map_err(err)
    }

    /// `self` after `other`.
    fn compose(&self, other: &PyMotor3) -> Self {
        Self(self.0.compose(&other.0))
    }

    fn reverse(&self) -> Self {
        Self(self.0.reverse())
    }

    fn apply(&self, p: &PyPoint3) -> PyPoint3 {
        PyPoint3(self.0.apply(&p.0))
    }

    fn coords(&self) -> [f64; 8] {
        self.0.coords()
    }

    fn mv(&self) -> PyMultivector {
        PyMultivector(self.0.mv().clone())
    }
}

/// Dual number `re + du * eps` with `eps^2 = 0`.
#[pyclass(name = "Dual", module = "pga_py", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
pub struct PyDual(DualScalar);

fn dual_operand(other: &Bound<'_, PyAny>) -> PyResult<DualScalar> {
    if let Ok(d) = other.extract::<PyRef<'_, PyDual>>() {
        return Ok(d.0);
    }
    other
        .extract::<f64>()
        .map(DualScalar::constant)
        .map_err(|_| PyTypeError::new_err("expected a Dual or a number"))
}

#[pymethods]
impl PyDual {
    #[new]
    #[pyo3(signature = (re, du = 0.0))]
    fn new(re: f64, du: f64) -> Self {
        Self(DualScalar::new(re, du))
    }

    #[getter]
    fn re(&self) -> f64 {
        self.0.re
    }

    #[getter]
    fn du(&self) -> f64 {
        self.0.du
    }

    fn __add__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(self.0 + dual_operand(o)?))
    }

    fn __radd__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(o)
    }

    fn __sub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(self.0 - dual_operand(o)?))
    }

    fn __rsub__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(dual_operand(o)? - self.0))
    }

    fn __mul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(self.0 * dual_operand(o)?))
    }

    fn __rmul__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(o)
    }

    fn __truediv__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.checked_div(&dual_operand(o)?).map(Self).map_err(err)
    }

    fn __rtruediv__(&self, o: &Bound<'_, PyAny>) -> PyResult<Self> {
        dual_operand(o)?.checked_div(&self.0).map(Self).map_err(err)
    }

    fn __pow__(&self, o: &Bound<'_, PyAny>, _modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        self.0.try_pow(&dual_operand(o)?).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0)
    }

    fn sin(&self) -> Self {
        Self(self.0.sin())
    }

    fn cos(&self) -> Self {
        Self(self.0.cos())
    }

    fn exp(&self) -> Self {
        Self(self.0.exp())
    }

    fn ln(&self) -> PyResult<Self> {
        self.0.try_ln().map(Self).map_err(err)
    }

    fn sqrt(&self) -> PyResult<Self> {
        self.0.try_sqrt().map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Dual({}, {})", self.0.re, self.0.du)
    }
}

/// Derivative of a Python callable at `x`, by evaluating it on `Dual(x, 1)`.
#[pyfunction]
fn derivative(f: &Bound<'_, PyAny>, x: f64) -> PyResult<f64> {
    let out = f.call1((PyDual(DualScalar::variable(x)),))?;
    Ok(dual_operand(&out)?.du)
}

/// Value and gradient of an expression string at `point`.
#[pyfunction]
fn diff(expression: &str, point: BTreeMap<String, f64>) -> PyResult<(f64, BTreeMap<String, f64>)> {
    let g = Expr::parse(expression)
        .and_then(|e| e.gradient_at(&point))
        .map_err(err)?;
    Ok((g.value, g.variables.into_iter().zip(g.gradient).collect()))
}

/// Blade product table with canonical labels.
#[pyfunction]
fn cayley(dim: &str) -> PyResult<Vec<Vec<String>>> {
    Ok(cayley_table(&*algebra(dim)?))
}

/// Run the randomized formula suite; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (dim, trials = 1000, seed = DEFAULT_SEED))]
fn check(py: Python<'_>, dim: &str, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
    if trials == 0 {
        return Err(PyValueError::new_err("trials must be positive"));
    }
    let alg = algebra(dim)?;
    let report = if dim == "2d" {
        run_suite_2d(&alg, trials, seed)
    } else {
        run_suite_3d(&alg, trials, seed)
    }
    .map_err(err)?;
    let text = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &text)
}

/// Integrate a free rigid body made of `(mass, (x, y, z))` particles from
/// body velocity `omega` = [w01, w02, w03, w23, w31, w12].
/// Returns {"samples": [...], "max_energy_drift": .., "max_momentum_drift": ..}.
#[pyfunction]
#[pyo3(signature = (masses, omega, dt, steps, stride = 1))]
fn simulate(
    py: Python<'_>,
    masses: Vec<(f64, (f64, f64, f64))>,
    omega: [f64; 6],
    dt: f64,
    steps: usize,
    stride: usize,
) -> PyResult<Py<PyAny>> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(PyValueError::new_err("dt must be positive"));
    }
    let particles: Vec<_> = masses.iter().map(|&(m, (x, y, z))| (m, p3::point3(x, y, z))).collect();
    let a = InertiaMap::from_point_masses(&particles).map_err(err)?;
    let tr = simulate_strided(&RigidBodyState::from_velocity(omega), &a, dt, steps, stride).map_err(err)?;
    let out = py.import("json")?.call_method1("loads", (tr.to_json(),))?;
    out.set_item("max_energy_drift", tr.max_energy_drift())?;
    out.set_item("max_momentum_drift", tr.max_momentum_drift())?;
    Ok(out.unbind())
}

#[pymodule]
fn pga_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyMultivector>()?;
    m.add_class::<PyPoint3>()?;
    m.add_class::<PyPlane>()?;
    m.add_class::<PyLine3>()?;
    m.add_class::<PyMotor3>()?;
    m.add_class::<PyDual>()?;
    m.add_function(wrap_pyfunction!(derivative, m)?)?;
    m.add_function(wrap_pyfunction!(diff, m)?)?;
    m.add_function(wrap_pyfunction!(cayley, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    Ok(())
}
