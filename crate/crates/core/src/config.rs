//! JSON job description shared by the CLI subcommands.
//!
//! ```json
//! {
//!   "density": { "kind": "ez" },
//!   "surface": { "family": "cylindrical", "A": 1.0, "b": 0.6, "c": 0.8 },
//!   "grid": [50, 50],
//!   "tolerance": 1e-8
//! }
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::{make_gallery_surface, GalleryDensity, GalleryKind, GallerySpec};
use crate::geometry::{DensityField, Domain, ParametricSurface};
use crate::ruled::{make_cylindrical_minimal, make_vertical_plane, CylindricalFamilyParams};
use crate::translation::make_translation_minimal;
use crate::Vec3;

pub const DEFAULT_GRID: [usize; 2] = [50, 50];
pub const ANALYTIC_TOLERANCE: f64 = 1e-8;
pub const FINITE_DIFFERENCE_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DensitySpec {
    Ez {},
    Gaussian {},
    Linear { a: [f64; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum SurfaceSpec {
    Cylindrical {
        #[serde(rename = "A")]
        a: f64,
        b: f64,
        c: f64,
        #[serde(default)]
        rot: f64,
        #[serde(default)]
        shift: [f64; 3],
    },
    VerticalPlane {
        direction: [f64; 2],
        #[serde(default)]
        through: [f64; 3],
    },
    Translation {
        c: f64,
        #[serde(rename = "D", default)]
        shift: f64,
        #[serde(default)]
        d: f64,
    },
    Sphere {
        radius: f64,
    },
    CylinderZ {
        radius: f64,
    },
    Plane {
        normal: [f64; 3],
        #[serde(default)]
        offset: f64,
    },
    Helicoid {
        pitch: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivatives {
    #[default]
    Analytic,
    FiniteDifference,
}

/// Parameter ranges overriding the family's default domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeSpec {
    pub u: [f64; 2],
    pub v: [f64; 2],
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obj: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub density: DensitySpec,
    pub surface: SurfaceSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranges: Option<RangeSpec>,
    #[serde(default = "default_grid")]
    pub grid: [usize; 2],
    /// Defaults to 1e-8 with analytic derivatives and 1e-5 with finite differences.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub derivatives: Derivatives,
    #[serde(default)]
    pub outputs: OutputSpec,
}

fn default_grid() -> [usize; 2] {
    DEFAULT_GRID
}

fn config_err(e: impl std::fmt::Display) -> Error {
    Error::Config(e.to_string())
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(config_err)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let mut numbers: Vec<f64> = Vec::new();
        if let DensitySpec::Linear { a } = self.density {
            numbers.extend(a);
        }
        match self.surface {
            SurfaceSpec::Cylindrical {
                a,
                b,
                c,
                rot,
                shift,
            } => {
                numbers.extend([a, b, c, rot]);
                numbers.extend(shift);
            }
            SurfaceSpec::VerticalPlane { direction, through } => {
                numbers.extend(direction);
                numbers.extend(through);
            }
            SurfaceSpec::Translation { c, shift, d } => numbers.extend([c, shift, d]),
            SurfaceSpec::Sphere { radius } | SurfaceSpec::CylinderZ { radius } => {
                numbers.push(radius)
            }
            SurfaceSpec::Plane { normal, offset } => {
                numbers.extend(normal);
                numbers.push(offset);
            }
            SurfaceSpec::Helicoid { pitch } => numbers.push(pitch),
        }
        if let Some(r) = self.ranges {
            numbers.extend(r.u);
            numbers.extend(r.v);
            if !(r.u[0] < r.u[1] && r.v[0] < r.v[1]) {
                return Err(Error::Config("ranges must be increasing intervals".into()));
            }
        }
        if let Some(t) = self.tolerance {
            numbers.push(t);
            if !(t > 0.0) {
                return Err(Error::Config(format!(
                    "tolerance must be positive, got {t}"
                )));
            }
        }
        if numbers.iter().any(|x| !x.is_finite()) {
            return Err(Error::Config("all numeric fields must be finite".into()));
        }
        if self.grid[0] < 2 || self.grid[1] < 2 {
            return Err(Error::Config(format!(
                "grid must be at least [2, 2], got {:?}",
                self.grid
            )));
        }
        Ok(())
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(match self.derivatives {
            Derivatives::Analytic => ANALYTIC_TOLERANCE,
            Derivatives::FiniteDifference => FINITE_DIFFERENCE_TOLERANCE,
        })
    }

    pub fn density_field(&self) -> Result<DensityField> {
        match self.density {
            DensitySpec::Ez {} => Ok(DensityField::ez()),
            DensitySpec::Gaussian {} => Ok(DensityField::gaussian()),
            DensitySpec::Linear { a } => DensityField::linear(Vec3::from(a)),
        }
    }

    fn gallery_density(&self) -> GalleryDensity {
        match self.density {
            DensitySpec::Ez {} => GalleryDensity::Ez,
            DensitySpec::Gaussian {} => GalleryDensity::Gaussian,
            DensitySpec::Linear { a } => GalleryDensity::Linear(Vec3::from(a)),
        }
    }

    fn domain_or(&self, default: Domain) -> Domain {
        self.ranges
            .map(|r| Domain::new((r.u[0], r.u[1]), (r.v[0], r.v[1])))
            .unwrap_or(default)
    }

    /// Builds the surface, switching to finite-difference derivatives if requested.
    pub fn build_surface(&self) -> Result<ParametricSurface> {
        let surface = match self.surface {
            SurfaceSpec::Cylindrical {
                a,
                b,
                c,
                rot,
                shift,
            } => {
                let p = CylindricalFamilyParams::new(a, b, c)?.with_motion(rot, Vec3::from(shift));
                let domain = self.domain_or(Domain::new((-1.0, 1.0), (-2.0, 2.0)));
                make_cylindrical_minimal(&p, domain)?.to_parametric()
            }
            SurfaceSpec::VerticalPlane { direction, through } => {
                let domain = self.domain_or(Domain::new((-1.0, 1.0), (-1.0, 1.0)));
                make_vertical_plane((direction[0], direction[1]), Vec3::from(through), domain)?
                    .to_parametric()
            }
            SurfaceSpec::Translation { c, shift, d } => {
                let domain = self.domain_or(Domain::new((-1.0, 1.0), (-1.0, 1.0)));
                make_translation_minimal(c, shift, d, domain)?.to_parametric()
            }
            _ => {
                let spec = GallerySpec::new(
                    self.gallery_kind().expect("gallery family"),
                    self.gallery_density(),
                );
                let s = make_gallery_surface(&spec)?;
                let domain = self.domain_or(s.domain());
                s.with_domain(domain)
            }
        };
        Ok(match self.derivatives {
            Derivatives::Analytic => surface,
            Derivatives::FiniteDifference => surface.finite_difference_view(),
        })
    }

    fn gallery_kind(&self) -> Option<GalleryKind> {
        Some(match self.surface {
            SurfaceSpec::Sphere { radius } => GalleryKind::Sphere { radius },
            SurfaceSpec::CylinderZ { radius } => GalleryKind::CylinderZ { radius },
            SurfaceSpec::Plane { normal, offset } => GalleryKind::Plane {
                normal: Vec3::from(normal),
                offset,
            },
            SurfaceSpec::Helicoid { pitch } => GalleryKind::Helicoid { pitch },
            _ => return None,
        })
    }

    /// Short description written into OBJ headers.
    pub fn label(&self) -> String {
        let surface = serde_json::to_string(&self.surface).expect("surface serializes");
        let density = serde_json::to_string(&self.density).expect("density serializes");
        format!("surface={surface} density={density}")
    }

    /// Copy with the surface field `name` set to `value` (for example `A` or `radius`).
    pub fn with_surface_param(&self, name: &str, value: f64) -> Result<Self> {
        let mut doc = serde_json::to_value(self).map_err(config_err)?;
        let surface = doc
            .get_mut("surface")
            .and_then(|s| s.as_object_mut())
            .expect("surface is an object");
        if name == "family" || !surface.contains_key(name) {
            let known: Vec<&str> = surface
                .keys()
                .map(String::as_str)
                .filter(|k| *k != "family")
                .collect();
            return Err(Error::Config(format!(
                "unknown surface parameter {name:?}; this family has {known:?}"
            )));
        }
        surface.insert(name.to_owned(), serde_json::json!(value));
        let cfg: Self = serde_json::from_value(doc).map_err(config_err)?;
        cfg.validate()?;
        Ok(cfg)
    }
}
