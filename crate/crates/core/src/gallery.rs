//! Reference densities and surfaces: spheres, vertical cylinders, planes and
//! helicoids under the Gaussian density and under `e^z`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geometry::{
    weighted_mean_curvature, DensityField, Domain, ParametricSurface, SurfaceJet,
};
use crate::Vec3;

/// Polar margin of the sphere chart, in radians.
pub const SPHERE_POLE_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GalleryDensity {
    Ez,
    Gaussian,
    Linear(Vec3),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GalleryKind {
    Sphere {
        radius: f64,
    },
    /// Circular cylinder around the z-axis.
    CylinderZ {
        radius: f64,
    },
    /// `{x : ⟨normal, x⟩ = offset}`.
    Plane {
        normal: Vec3,
        offset: f64,
    },
    Helicoid {
        pitch: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GallerySpec {
    pub kind: GalleryKind,
    pub density: GalleryDensity,
}

impl GallerySpec {
    pub fn new(kind: GalleryKind, density: GalleryDensity) -> Self {
        Self { kind, density }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            GalleryKind::Sphere { radius } | GalleryKind::CylinderZ { radius } => {
                if !(radius > 0.0 && radius.is_finite()) {
                    return Err(Error::InvalidParams(format!(
                        "radius must be positive, got {radius}"
                    )));
                }
            }
            GalleryKind::Plane { normal, offset } => {
                if !offset.is_finite() || (normal.norm() - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidParams(format!(
                        "plane needs a unit normal and finite offset, |n| = {}",
                        normal.norm()
                    )));
                }
            }
            GalleryKind::Helicoid { pitch } => {
                if !(pitch.is_finite() && pitch != 0.0) {
                    return Err(Error::InvalidParams(format!(
                        "helicoid pitch must be nonzero, got {pitch}"
                    )));
                }
            }
        }
        if let GalleryDensity::Linear(a) = self.density {
            make_density(GalleryDensity::Linear(a))?;
        }
        Ok(())
    }

    /// Parameter domain used by [`make_gallery_surface`].
    pub fn default_domain(&self) -> Domain {
        match self.kind {
            GalleryKind::Sphere { .. } => Domain::new(
                (SPHERE_POLE_MARGIN, PI - SPHERE_POLE_MARGIN),
                (0.0, 2.0 * PI),
            ),
            GalleryKind::CylinderZ { .. } => Domain::new((0.0, 2.0 * PI), (-1.0, 1.0)),
            GalleryKind::Plane { .. } => Domain::new((-1.0, 1.0), (-1.0, 1.0)),
            GalleryKind::Helicoid { .. } => Domain::new((-1.0, 1.0), (-PI, PI)),
        }
    }
}

pub fn make_density(kind: GalleryDensity) -> Result<DensityField> {
    match kind {
        GalleryDensity::Ez => Ok(DensityField::ez()),
        GalleryDensity::Gaussian => Ok(DensityField::gaussian()),
        GalleryDensity::Linear(a) => DensityField::linear(a),
    }
}

/// Orthonormal `e1, e2` with `e1 × e2 = n`.
fn plane_frame(n: Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() < 0.9 {
        Vec3::x()
    } else {
        Vec3::y()
    };
    let e1 = (helper - helper.dot(&n) * n).normalize();
    (e1, n.cross(&e1))
}

/// Standard parametrization with analytic derivatives. Spheres and cylinders
/// carry the outward normal, planes carry `normal`.
///
/// - sphere: `R(sin u cos v, sin u sin v, cos u)`, `u` the polar angle
/// - cylinder: `(R cos u, R sin u, v)`
/// - plane: `offset·n + u e1 + v e2`
/// - helicoid: `(u cos v, u sin v, pitch·v)`
pub fn make_gallery_surface(spec: &GallerySpec) -> Result<ParametricSurface> {
    spec.validate()?;
    let domain = spec.default_domain();
    let surface = match spec.kind {
        GalleryKind::Sphere { radius: r } => ParametricSurface::analytic(domain, move |u, v| {
            let (su, cu) = u.sin_cos();
            let (sv, cv) = v.sin_cos();
            SurfaceJet {
                x: r * Vec3::new(su * cv, su * sv, cu),
                xu: r * Vec3::new(cu * cv, cu * sv, -su),
                xv: r * Vec3::new(-su * sv, su * cv, 0.0),
                xuu: -r * Vec3::new(su * cv, su * sv, cu),
                xuv: r * Vec3::new(-cu * sv, cu * cv, 0.0),
                xvv: -r * Vec3::new(su * cv, su * sv, 0.0),
            }
        }),
        GalleryKind::CylinderZ { radius: r } => ParametricSurface::analytic(domain, move |u, v| {
            let (s, c) = u.sin_cos();
            SurfaceJet {
                x: Vec3::new(r * c, r * s, v),
                xu: Vec3::new(-r * s, r * c, 0.0),
                xv: Vec3::z(),
                xuu: Vec3::new(-r * c, -r * s, 0.0),
                xuv: Vec3::zeros(),
                xvv: Vec3::zeros(),
            }
        }),
        GalleryKind::Plane { normal, offset } => {
            let (e1, e2) = plane_frame(normal);
            let origin = offset * normal;
            ParametricSurface::analytic(domain, move |u, v| SurfaceJet {
                x: origin + u * e1 + v * e2,
                xu: e1,
                xv: e2,
                xuu: Vec3::zeros(),
                xuv: Vec3::zeros(),
                xvv: Vec3::zeros(),
            })
        }
        GalleryKind::Helicoid { pitch } => ParametricSurface::analytic(domain, move |u, v| {
            let (s, c) = v.sin_cos();
            SurfaceJet {
                x: Vec3::new(u * c, u * s, pitch * v),
                xu: Vec3::new(c, s, 0.0),
                xv: Vec3::new(-u * s, u * c, pitch),
                xuu: Vec3::zeros(),
                xuv: Vec3::new(-s, c, 0.0),
                xvv: Vec3::new(-u * c, -u * s, 0.0),
            }
        }),
    };
    Ok(surface)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialFamily {
    Sphere,
    CylinderZ,
}

impl RadialFamily {
    fn spec(self, radius: f64) -> GallerySpec {
        let kind = match self {
            Self::Sphere => GalleryKind::Sphere { radius },
            Self::CylinderZ => GalleryKind::CylinderZ { radius },
        };
        GallerySpec::new(kind, GalleryDensity::Gaussian)
    }

    /// Point where the root finder evaluates `Hphi`.
    fn probe(self) -> (f64, f64) {
        match self {
            Self::Sphere => (FRAC_PI_2, 0.0),
            Self::CylinderZ => (0.0, 0.0),
        }
    }
}

/// Spread `max − min` of `Hphi` over an `n × n` grid.
pub fn hphi_spread(surface: &ParametricSurface, density: &DensityField, n: usize) -> Result<f64> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (u, v) in surface.domain().grid(n, n) {
        let h = weighted_mean_curvature(surface, density, u, v)?.h_phi;
        lo = lo.min(h);
        hi = hi.max(h);
    }
    Ok(hi - lo)
}

const CONSTANCY_TOL: f64 = 1e-9;
const BISECTION_WIDTH: f64 = 1e-10;

/// Radius in `bracket` at which the sphere or cylinder becomes minimal for `density`.
///
/// `Hphi` must first be constant over the surface at both bracket ends, otherwise
/// [`Error::NonConstantCurvature`] is returned.
pub fn find_minimal_radius(
    family: RadialFamily,
    density: &DensityField,
    bracket: (f64, f64),
) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "bracket must satisfy 0 < lo < hi, got ({lo}, {hi})"
        )));
    }
    let surface_at = |r: f64| make_gallery_surface(&family.spec(r));
    for r in [lo, hi] {
        let spread = hphi_spread(&surface_at(r)?, density, 9)?;
        if spread > CONSTANCY_TOL {
            return Err(Error::NonConstantCurvature { spread });
        }
    }
    let (pu, pv) = family.probe();
    let f = |r: f64| -> Result<f64> {
        Ok(weighted_mean_curvature(&surface_at(r)?, density, pu, pv)?.h_phi)
    };
    let (mut f_lo, f_hi) = (f(lo)?, f(hi)?);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
