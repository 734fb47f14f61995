//! Fundamental forms, Euclidean and weighted mean curvature, and grid reports.
//!
//! Orientation: `N = (Xu ∧ Xv) / |Xu ∧ Xv|` and
//! `H = (eG − 2fF + gE) / (2(EG − F²))` with `e = ⟨N, Xuu⟩` etc.
//! The weighted curvature is `Hphi = H − ½⟨∇φ, N⟩`. Reversing the
//! parametrization orientation negates both.

use rayon::prelude::*;

use super::density::DensityField;
use super::surface::{ParametricSurface, SurfaceJet};
use crate::error::{Error, Result};
use crate::Vec3;

/// Surfaces with `|Xu ∧ Xv|` at or below this are rejected as non-regular.
pub const DEGENERACY_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub first: FirstForm,
    pub second: SecondForm,
    pub normal: Vec3,
    /// `|Xu ∧ Xv|`.
    pub area_element: f64,
}

impl FundamentalForms {
    pub fn from_jet(jet: &SurfaceJet, u: f64, v: f64) -> Result<Self> {
        let cross = jet.xu.cross(&jet.xv);
        let norm = cross.norm();
        if !(norm > DEGENERACY_THRESHOLD) {
            return Err(Error::DegenerateSurface { u, v, norm });
        }
        let normal = cross / norm;
        Ok(Self {
            first: FirstForm {
                e: jet.xu.dot(&jet.xu),
                f: jet.xu.dot(&jet.xv),
                g: jet.xv.dot(&jet.xv),
            },
            second: SecondForm {
                e: normal.dot(&jet.xuu),
                f: normal.dot(&jet.xuv),
                g: normal.dot(&jet.xvv),
            },
            normal,
            area_element: norm,
        })
    }

    pub fn mean_curvature(&self) -> f64 {
        let (i, ii) = (self.first, self.second);
        (ii.e * i.g - 2.0 * ii.f * i.f + ii.g * i.e) / (2.0 * (i.e * i.g - i.f * i.f))
    }
}

pub fn fundamental_forms(surface: &ParametricSurface, u: f64, v: f64) -> Result<FundamentalForms> {
    FundamentalForms::from_jet(&surface.jet(u, v), u, v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    pub h: f64,
    pub h_phi: f64,
}

pub(crate) fn curvature_from_jet(
    jet: &SurfaceJet,
    density: &DensityField,
    u: f64,
    v: f64,
) -> Result<(FundamentalForms, Curvature)> {
    let forms = FundamentalForms::from_jet(jet, u, v)?;
    let h = forms.mean_curvature();
    let h_phi = h - 0.5 * density.grad_phi(&jet.x).dot(&forms.normal);
    Ok((forms, Curvature { h, h_phi }))
}

pub fn weighted_mean_curvature(
    surface: &ParametricSurface,
    density: &DensityField,
    u: f64,
    v: f64,
) -> Result<Curvature> {
    curvature_from_jet(&surface.jet(u, v), density, u, v).map(|(_, c)| c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRecord {
    pub u: f64,
    pub v: f64,
    pub point: Vec3,
    pub h: f64,
    pub h_phi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimalityReport {
    pub records: Vec<GridRecord>,
    pub max_abs_hphi: f64,
    pub mean_abs_hphi: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl MinimalityReport {
    pub fn from_records(records: Vec<GridRecord>, tolerance: f64) -> Self {
        let max_abs_hphi = records.iter().map(|r| r.h_phi.abs()).fold(0.0, f64::max);
        let mean_abs_hphi = if records.is_empty() {
            0.0
        } else {
            records.iter().map(|r| r.h_phi.abs()).sum::<f64>() / records.len() as f64
        };
        Self {
            records,
            max_abs_hphi,
            mean_abs_hphi,
            tolerance,
            pass: max_abs_hphi < tolerance,
        }
    }

    pub fn min_max_hphi(&self) -> (f64, f64) {
        self.records
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r.h_phi), hi.max(r.h_phi))
            })
    }
}

/// Evaluates `H` and `Hphi` on a uniform `nu × nv` grid (boundary included).
///
/// Points are evaluated in parallel and assembled in grid order, so the
/// result does not depend on the number of worker threads.
pub fn minimality_report(
    surface: &ParametricSurface,
    density: &DensityField,
    nu: usize,
    nv: usize,
    tolerance: f64,
) -> Result<MinimalityReport> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidParams(format!(
            "grid must be at least 2x2, got {nu}x{nv}"
        )));
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidParams(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let records = surface
        .domain()
        .grid(nu, nv)
        .into_par_iter()
        .map(|(u, v)| {
            let jet = surface.jet(u, v);
            let (_, c) = curvature_from_jet(&jet, density, u, v)?;
            Ok(GridRecord {
                u,
                v,
                point: jet.x,
                h: c.h,
                h_phi: c.h_phi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MinimalityReport::from_records(records, tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::surface::Domain;
    use approx::assert_abs_diff_eq;

    fn plane(height: f64) -> ParametricSurface {
        ParametricSurface::analytic(Domain::unit_square(), move |u, v| SurfaceJet {
            x: Vec3::new(u, v, height),
            xu: Vec3::x(),
            xv: Vec3::y(),
            xuu: Vec3::zeros(),
            xuv: Vec3::zeros(),
            xvv: Vec3::zeros(),
        })
    }

    fn vertical_plane() -> ParametricSurface {
        ParametricSurface::from_points(Domain::unit_square(), |u, v| Vec3::new(u, 0.0, v))
    }

    fn helicoid() -> ParametricSurface {
        ParametricSurface::from_points(Domain::new((0.5, 1.5), (-1.0, 1.0)), |u, v| {
            Vec3::new(u * v.cos(), u * v.sin(), v)
        })
    }

    #[test]
    fn plane_forms() {
        let f = fundamental_forms(&plane(0.0), 0.0, 0.0).unwrap();
        assert_eq!(
            f.first,
            FirstForm {
                e: 1.0,
                f: 0.0,
                g: 1.0
            }
        );
        assert_eq!(
            f.second,
            SecondForm {
                e: 0.0,
                f: 0.0,
                g: 0.0
            }
        );
        assert_eq!(f.normal, Vec3::z());
    }

    #[test]
    fn helicoid_normal() {
        let f = fundamental_forms(&helicoid(), 1.0, 0.0).unwrap();
        let expected = Vec3::new(0.0, -1.0, 1.0) / 2f64.sqrt();
        assert_abs_diff_eq!(f.normal, expected, epsilon = 1e-9);
        assert!((f.normal.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn plane_curvatures_under_ez() {
        let ez = DensityField::ez();
        let c = weighted_mean_curvature(&plane(0.0), &ez, 0.3, 0.4).unwrap();
        assert_eq!(c.h, 0.0);
        assert_eq!(c.h_phi, -0.5);
        let c = weighted_mean_curvature(&vertical_plane(), &ez, 0.3, 0.4).unwrap();
        assert_eq!(c.h_phi, 0.0);
    }

    #[test]
    fn helicoid_weighted_curvature() {
        let c = weighted_mean_curvature(&helicoid(), &DensityField::ez(), 1.0, 0.0).unwrap();
        assert_abs_diff_eq!(c.h, 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(c.h_phi, -0.5 / 2f64.sqrt(), epsilon = 1e-7);
    }

    #[test]
    fn degenerate_point_is_reported() {
        let cone = ParametricSurface::from_points(Domain::unit_square(), |u, v| {
            Vec3::new(u * v.cos(), u * v.sin(), u)
        });
        match fundamental_forms(&cone, 0.0, 0.5) {
            Err(Error::DegenerateSurface { u, v, .. }) => {
                assert_eq!((u, v), (0.0, 0.5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reports_on_planes() {
        let ez = DensityField::ez();
        let r = minimality_report(&vertical_plane(), &ez, 10, 10, 1e-9).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_abs_hphi, 0.0);
        assert_eq!(r.records.len(), 100);

        let r = minimality_report(&plane(0.0), &ez, 10, 10, 1e-9).unwrap();
        assert!(!r.pass);
        assert_eq!(r.max_abs_hphi, 0.5);
        assert_eq!(r.mean_abs_hphi, 0.5);
    }

    #[test]
    fn report_rejects_bad_grid() {
        let ez = DensityField::ez();
        assert!(minimality_report(&plane(0.0), &ez, 1, 10, 1e-9).is_err());
        assert!(minimality_report(&plane(0.0), &ez, 10, 10, 0.0).is_err());
    }

    #[test]
    fn swapping_parameters_flips_signs() {
        let ez = DensityField::ez();
        let s = helicoid();
        let a = weighted_mean_curvature(&s, &ez, 0.8, 0.3).unwrap();
        let b = weighted_mean_curvature(&s.swapped(), &ez, 0.3, 0.8).unwrap();
        assert_abs_diff_eq!(a.h, -b.h, epsilon = 1e-9);
        assert_abs_diff_eq!(a.h_phi, -b.h_phi, epsilon = 1e-9);
    }

    #[test]
    fn flat_density_reduces_to_euclidean() {
        let s = helicoid();
        let c = weighted_mean_curvature(&s, &DensityField::flat(), 0.7, 0.2).unwrap();
        assert_eq!(c.h, c.h_phi);
    }
}
