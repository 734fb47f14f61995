//! Python bindings for the weighted-minimal surface toolkit.

use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use weighted_minimal::config::JobConfig;
use weighted_minimal::gallery::{self, GalleryDensity, GalleryKind, GallerySpec, RadialFamily};
use weighted_minimal::geometry::{self, DensityField, Domain, ParametricSurface};
use weighted_minimal::mesh_io;
use weighted_minimal::ruled;
use weighted_minimal::translation as trans;
use weighted_minimal::{Error, Vec3};

type Triple = (f64, f64, f64);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyOSError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn triple(v: Vec3) -> Triple {
    (v.x, v.y, v.z)
}

fn vec3(t: Triple) -> Vec3 {
    Vec3::new(t.0, t.1, t.2)
}

/// A density `e^phi` on R^3.
#[pyclass(name = "Density", frozen)]
struct PyDensity(DensityField);

#[pymethods]
impl PyDensity {
    /// The log-linear density `e^z`.
    #[staticmethod]
    fn ez() -> Self {
        Self(DensityField::ez())
    }

    /// Gaussian density, `phi = -|x|^2 / 2`.
    #[staticmethod]
    fn gaussian() -> Self {
        Self(DensityField::gaussian())
    }

    /// `phi = <a, x>`.
    #[staticmethod]
    fn linear(a: Triple) -> PyResult<Self> {
        DensityField::linear(vec3(a)).map(Self).map_err(to_py)
    }

    fn phi(&self, x: Triple) -> f64 {
        self.0.phi(&vec3(x))
    }

    fn grad_phi(&self, x: Triple) -> Triple {
        triple(self.0.grad_phi(&vec3(x)))
    }

    fn __repr__(&self) -> String {
        format!("Density({:?})", self.0.kind())
    }
}

/// A parametric surface over a rectangular `(u, v)` domain.
#[pyclass(name = "Surface", frozen)]
struct PySurface(ParametricSurface);

#[pymethods]
impl PySurface {
    #[getter]
    fn u_range(&self) -> (f64, f64) {
        self.0.domain().u
    }

    #[getter]
    fn v_range(&self) -> (f64, f64) {
        self.0.domain().v
    }

    #[getter]
    fn analytic(&self) -> bool {
        self.0.has_analytic_derivatives()
    }

    fn point(&self, u: f64, v: f64) -> Triple {
        triple(self.0.point(u, v))
    }

    /// `(H, Hphi)` at `(u, v)`.
    fn curvature(&self, density: &PyDensity, u: f64, v: f64) -> PyResult<(f64, f64)> {
        let c = geometry::weighted_mean_curvature(&self.0, &density.0, u, v).map_err(to_py)?;
        Ok((c.h, c.h_phi))
    }

    /// Evaluates `Hphi` on an `nu x nv` grid. Returns a dict with `max_abs_hphi`,
    /// `mean_abs_hphi`, `tolerance`, `passed` and `records` (tuples `u, v, x, y, z, H, Hphi`).
    #[pyo3(signature = (density, nu = 50, nv = 50, tolerance = 1e-8))]
    fn minimality_report<'py>(
        &self,
        py: Python<'py>,
        density: &PyDensity,
        nu: usize,
        nv: usize,
        tolerance: f64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = py
            .detach(|| geometry::minimality_report(&self.0, &density.0, nu, nv, tolerance))
            .map_err(to_py)?;
        let records: Vec<(f64, f64, f64, f64, f64, f64, f64)> = r
            .records
            .iter()
            .map(|g| (g.u, g.v, g.point.x, g.point.y, g.point.z, g.h, g.h_phi))
            .collect();
        let d = PyDict::new(py);
        d.set_item("max_abs_hphi", r.max_abs_hphi)?;
        d.set_item("mean_abs_hphi", r.mean_abs_hphi)?;
        d.set_item("tolerance", r.tolerance)?;
        d.set_item("passed", r.pass)?;
        d.set_item("records", records)?;
        Ok(d)
    }

    /// Weighted area by the midpoint rule on `nu x nv` cells.
    #[pyo3(signature = (density, nu = 40, nv = 40))]
    fn weighted_area(
        &self,
        py: Python<'_>,
        density: &PyDensity,
        nu: usize,
        nv: usize,
    ) -> PyResult<f64> {
        py.detach(|| geometry::weighted_area(&self.0, &density.0, nu, nv))
            .map_err(to_py)
    }

    /// `(numeric, formula)` first variation of weighted area along the unit normal.
    #[pyo3(signature = (density, dt = 1e-4, nu = 40, nv = 40))]
    fn first_variation(
        &self,
        py: Python<'_>,
        density: &PyDensity,
        dt: f64,
        nu: usize,
        nv: usize,
    ) -> PyResult<(f64, f64)> {
        let fv = py
            .detach(|| geometry::first_variation_check(&self.0, &density.0, |_, _| 1.0, dt, nu, nv))
            .map_err(to_py)?;
        Ok((fv.numeric_derivative, fv.formula_value))
    }

    /// Rotation by `angle` about the z-axis followed by `shift`.
    #[pyo3(signature = (angle, shift = (0.0, 0.0, 0.0)))]
    fn rotated_z(&self, angle: f64, shift: Triple) -> Self {
        Self(self.0.rotated_z(angle, vec3(shift)))
    }

    /// The same surface with derivatives taken by finite differences.
    fn finite_difference(&self) -> Self {
        Self(self.0.finite_difference_view())
    }

    /// `(vertices, quads)` of the `nu x nv` grid mesh, quads 0-based.
    fn tessellate(&self, nu: usize, nv: usize) -> PyResult<(Vec<Triple>, Vec<[usize; 4]>)> {
        let mesh = mesh_io::tessellate(&self.0, nu, nv, "python").map_err(to_py)?;
        Ok((mesh.vertices.into_iter().map(triple).collect(), mesh.faces))
    }

    #[pyo3(signature = (path, nu = 50, nv = 50, generator = "python"))]
    fn export_obj(
        &self,
        path: std::path::PathBuf,
        nu: usize,
        nv: usize,
        generator: &str,
    ) -> PyResult<()> {
        let mesh = mesh_io::tessellate(&self.0, nu, nv, generator).map_err(to_py)?;
        mesh_io::export_obj(&mesh, path).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        let d = self.0.domain();
        format!("Surface(u_range={:?}, v_range={:?})", d.u, d.v)
    }
}

/// Member of the cylindrical minimal family of `e^z` with director `(0, b, c)`.
#[pyfunction]
#[pyo3(signature = (a, b, c, rot = 0.0, shift = (0.0, 0.0, 0.0), u_range = (-1.0, 1.0), v_range = (-2.0, 2.0)))]
fn cylindrical(
    a: f64,
    b: f64,
    c: f64,
    rot: f64,
    shift: Triple,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> PyResult<PySurface> {
    let p = ruled::CylindricalFamilyParams::new(a, b, c)
        .map_err(to_py)?
        .with_motion(rot, vec3(shift));
    ruled::make_cylindrical_minimal(&p, Domain::new(u_range, v_range))
        .map(|rs| PySurface(rs.to_parametric()))
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (direction, through = (0.0, 0.0, 0.0), u_range = (-1.0, 1.0), v_range = (-1.0, 1.0)))]
fn vertical_plane(
    direction: (f64, f64),
    through: Triple,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> PyResult<PySurface> {
    ruled::make_vertical_plane(direction, vec3(through), Domain::new(u_range, v_range))
        .map(|rs| PySurface(rs.to_parametric()))
        .map_err(to_py)
}

/// Translation minimal surface `(u, v, g(u) + c v + d)` of `e^z`.
#[pyfunction]
#[pyo3(signature = (c, shift = 0.0, d = 0.0, u_range = (-1.0, 1.0), v_range = (-1.0, 1.0)))]
fn translation(
    c: f64,
    shift: f64,
    d: f64,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> PyResult<PySurface> {
    trans::make_translation_minimal(c, shift, d, Domain::new(u_range, v_range))
        .map(|ts| PySurface(ts.to_parametric()))
        .map_err(to_py)
}

fn gallery_surface(kind: GalleryKind) -> PyResult<PySurface> {
    gallery::make_gallery_surface(&GallerySpec::new(kind, GalleryDensity::Ez))
        .map(PySurface)
        .map_err(to_py)
}

#[pyfunction]
fn sphere(radius: f64) -> PyResult<PySurface> {
    gallery_surface(GalleryKind::Sphere { radius })
}

#[pyfunction]
fn cylinder_z(radius: f64) -> PyResult<PySurface> {
    gallery_surface(GalleryKind::CylinderZ { radius })
}

#[pyfunction]
#[pyo3(signature = (normal, offset = 0.0))]
fn plane(normal: Triple, offset: f64) -> PyResult<PySurface> {
    gallery_surface(GalleryKind::Plane {
        normal: vec3(normal),
        offset,
    })
}

#[pyfunction]
fn helicoid(pitch: f64) -> PyResult<PySurface> {
    gallery_surface(GalleryKind::Helicoid { pitch })
}

/// `(surface, density)` built from a JSON job description.
#[pyfunction]
fn from_config(json: &str) -> PyResult<(PySurface, PyDensity)> {
    let cfg = JobConfig::from_json(json).map_err(to_py)?;
    let surface = cfg.build_surface().map_err(to_py)?;
    let density = cfg.density_field().map_err(to_py)?;
    Ok((PySurface(surface), PyDensity(density)))
}

/// `-(1 + c^2) log|cos((u + shift) / sqrt(1 + c^2))|`.
#[pyfunction]
#[pyo3(signature = (c, u, shift = 0.0))]
fn scherk_profile(c: f64, u: f64, shift: f64) -> PyResult<f64> {
    trans::scherk_density_profile(c, shift, u).map_err(to_py)
}

/// `(position, velocity)` of the closed-form directrix.
#[pyfunction]
fn closed_form_directrix(a: f64, b: f64, c: f64, u: f64) -> PyResult<(Triple, Triple)> {
    let (p, v) = ruled::closed_form_directrix(a, b, c, u).map_err(to_py)?;
    Ok((triple(p), triple(v)))
}

/// RK4 integration of the directrix from the closed form at `u = 0`.
/// Returns a dict with `u`, `position`, `velocity` lists and the deviations.
#[pyfunction]
#[pyo3(signature = (a, b, c, u_end = 1.0, step = 1e-3))]
fn integrate_directrix<'py>(
    py: Python<'py>,
    a: f64,
    b: f64,
    c: f64,
    u_end: f64,
    step: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let sol = ruled::integrate_from_closed_form(a, b, c, u_end, step).map_err(to_py)?;
    let dev = sol.closed_form_deviation(a).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("u", sol.samples.iter().map(|s| s.u).collect::<Vec<_>>())?;
    d.set_item(
        "position",
        sol.samples
            .iter()
            .map(|s| triple(s.pos))
            .collect::<Vec<_>>(),
    )?;
    d.set_item(
        "velocity",
        sol.samples
            .iter()
            .map(|s| triple(s.vel))
            .collect::<Vec<_>>(),
    )?;
    d.set_item("position_deviation", dev.position)?;
    d.set_item("speed_drift", sol.speed_drift())?;
    d.set_item("plane_drift", sol.plane_drift())?;
    Ok(d)
}

/// Radius at which a sphere or z-cylinder is minimal in Gauss space.
#[pyfunction]
#[pyo3(signature = (family, bracket = (0.5, 2.0)))]
fn find_minimal_radius(family: &str, bracket: (f64, f64)) -> PyResult<f64> {
    let family = match family {
        "sphere" => RadialFamily::Sphere,
        "cylinder" | "cylinder_z" => RadialFamily::CylinderZ,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    gallery::find_minimal_radius(family, &DensityField::gaussian(), bracket).map_err(to_py)
}

/// Runs the command-line interface with `args` (without the program name).
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    weighted_minimal::cli::run(std::iter::once("weighted-minimal".to_owned()).chain(args))
}

#[pymodule]
fn weighted_minimal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDensity>()?;
    m.add_class::<PySurface>()?;
    m.add_function(wrap_pyfunction!(cylindrical, m)?)?;
    m.add_function(wrap_pyfunction!(vertical_plane, m)?)?;
    m.add_function(wrap_pyfunction!(translation, m)?)?;
    m.add_function(wrap_pyfunction!(sphere, m)?)?;
    m.add_function(wrap_pyfunction!(cylinder_z, m)?)?;
    m.add_function(wrap_pyfunction!(plane, m)?)?;
    m.add_function(wrap_pyfunction!(helicoid, m)?)?;
    m.add_function(wrap_pyfunction!(from_config, m)?)?;
    m.add_function(wrap_pyfunction!(scherk_profile, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_directrix, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_directrix, m)?)?;
    m.add_function(wrap_pyfunction!(find_minimal_radius, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
