use std::fmt;
use std::sync::Arc;

use nalgebra::{Matrix3, Rotation3};

use crate::error::{Error, Result};
use crate::geometry::surface::linspace;
use crate::geometry::{Domain, ParametricSurface, SurfaceJet};
use crate::Vec3;

/// Position, first and second derivative of a space curve at one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveJet {
    pub pos: Vec3,
    pub d1: Vec3,
    pub d2: Vec3,
}

#[derive(Clone)]
pub struct Curve(Arc<dyn Fn(f64) -> CurveJet + Send + Sync>);

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Curve(..)")
    }
}

impl Curve {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(f64) -> CurveJet + Send + Sync + 'static,
    {
        Self(Arc::new(f))
    }

    pub fn constant(p: Vec3) -> Self {
        Self::new(move |_| CurveJet {
            pos: p,
            d1: Vec3::zeros(),
            d2: Vec3::zeros(),
        })
    }

    /// `u ↦ origin + u·direction`.
    pub fn line(origin: Vec3, direction: Vec3) -> Self {
        Self::new(move |u| CurveJet {
            pos: origin + u * direction,
            d1: direction,
            d2: Vec3::zeros(),
        })
    }

    pub fn eval(&self, u: f64) -> CurveJet {
        (self.0)(u)
    }

    /// `x ↦ M x + shift`; derivatives are only multiplied by `M`.
    pub fn mapped(&self, m: Matrix3<f64>, shift: Vec3) -> Self {
        let inner = self.clone();
        Self::new(move |u| {
            let j = inner.eval(u);
            CurveJet {
                pos: m * j.pos + shift,
                d1: m * j.d1,
                d2: m * j.d2,
            }
        })
    }

    pub fn transformed(&self, rotation: Rotation3<f64>, shift: Vec3) -> Self {
        self.mapped(*rotation.matrix(), shift)
    }
}

/// Tolerance for the three normalization conditions.
pub const NORMALIZATION_TOL: f64 = 1e-8;
const NORMALIZATION_SAMPLES: usize = 32;

/// `X(u, v) = α(u) + v β(u)` with `|α'| = 1`, `|β| = 1`, `⟨α', β⟩ = 0`.
#[derive(Debug, Clone)]
pub struct RuledSurface {
    alpha: Curve,
    beta: Curve,
    domain: Domain,
}

/// Validates the normalization of directrix `alpha` and director `beta` on 32
/// evenly spaced parameters of `u_range`.
pub fn build_ruled(
    alpha: Curve,
    beta: Curve,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> Result<RuledSurface> {
    let samples: Vec<(f64, CurveJet, CurveJet)> =
        linspace(u_range.0, u_range.1, NORMALIZATION_SAMPLES)
            .into_iter()
            .map(|u| (u, alpha.eval(u), beta.eval(u)))
            .collect();

    type Check = (&'static str, fn(&CurveJet, &CurveJet) -> f64);
    let checks: [Check; 3] = [
        ("|alpha'| = 1", |a, _| a.d1.norm() - 1.0),
        ("|beta| = 1", |_, b| b.pos.norm() - 1.0),
        ("<alpha', beta> = 0", |a, b| a.d1.dot(&b.pos)),
    ];
    for (condition, deviation) in checks {
        let worst = samples
            .iter()
            .map(|(u, a, b)| (*u, deviation(a, b).abs()))
            .fold((f64::NAN, -1.0), |acc, x| {
                if x.1 > acc.1 || x.1.is_nan() {
                    x
                } else {
                    acc
                }
            });
        if !(worst.1 <= NORMALIZATION_TOL) {
            return Err(Error::NormalizationViolation {
                condition,
                u: worst.0,
                deviation: worst.1,
            });
        }
    }
    Ok(RuledSurface {
        alpha,
        beta,
        domain: Domain::new(u_range, v_range),
    })
}

impl RuledSurface {
    pub fn alpha(&self) -> &Curve {
        &self.alpha
    }

    pub fn beta(&self) -> &Curve {
        &self.beta
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn point(&self, u: f64, v: f64) -> Vec3 {
        self.alpha.eval(u).pos + v * self.beta.eval(u).pos
    }

    /// The same surface as a [`ParametricSurface`] with analytic derivatives
    /// `Xu = α' + vβ'`, `Xv = β`, `Xuu = α'' + vβ''`, `Xuv = β'`, `Xvv = 0`.
    pub fn to_parametric(&self) -> ParametricSurface {
        let alpha = self.alpha.clone();
        let beta = self.beta.clone();
        ParametricSurface::analytic(self.domain, move |u, v| {
            let a = alpha.eval(u);
            let b = beta.eval(u);
            SurfaceJet {
                x: a.pos + v * b.pos,
                xu: a.d1 + v * b.d1,
                xv: b.pos,
                xuu: a.d2 + v * b.d2,
                xuv: b.d1,
                xvv: Vec3::zeros(),
            }
        })
    }

    /// Rigid motion `x ↦ R x + shift`; normalization is preserved.
    pub fn transformed(&self, rotation: Rotation3<f64>, shift: Vec3) -> Self {
        self.orthogonal_map(*rotation.matrix(), shift)
    }

    /// `x ↦ Q x + shift` for orthogonal `Q` (reflections allowed).
    pub fn orthogonal_map(&self, q: Matrix3<f64>, shift: Vec3) -> Self {
        Self {
            alpha: self.alpha.mapped(q, shift),
            beta: self.beta.mapped(q, Vec3::zeros()),
            domain: self.domain,
        }
    }

    /// `max |β'|` over `n` samples of the `u` range.
    pub fn max_director_speed(&self, n: usize) -> f64 {
        self.domain
            .u_samples(n)
            .into_iter()
            .map(|u| self.beta.eval(u).d1.norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn circle() -> Curve {
        Curve::new(|u| {
            let (s, c) = u.sin_cos();
            CurveJet {
                pos: Vec3::new(c, s, 0.0),
                d1: Vec3::new(-s, c, 0.0),
                d2: Vec3::new(-c, -s, 0.0),
            }
        })
    }

    #[test]
    fn vertical_plane_is_valid() {
        let rs = build_ruled(
            Curve::line(Vec3::zeros(), Vec3::x()),
            Curve::constant(Vec3::z()),
            (-1.0, 1.0),
            (-1.0, 1.0),
        )
        .unwrap();
        assert_eq!(rs.point(0.5, 2.0), Vec3::new(0.5, 0.0, 2.0));
    }

    #[test]
    fn circular_cylinder_is_valid() {
        let rs = build_ruled(
            circle(),
            Curve::constant(Vec3::z()),
            (0.0, 6.0),
            (-1.0, 1.0),
        )
        .unwrap();
        let s = rs.to_parametric();
        assert!(s.derivative_mismatch(9, 5) < 1e-5);
    }

    #[test]
    fn fast_directrix_rejected() {
        let err = build_ruled(
            Curve::line(Vec3::zeros(), Vec3::new(2.0, 0.0, 0.0)),
            Curve::constant(Vec3::z()),
            (0.0, 1.0),
            (0.0, 1.0),
        )
        .unwrap_err();
        match err {
            Error::NormalizationViolation {
                condition,
                deviation,
                ..
            } => {
                assert_eq!(condition, "|alpha'| = 1");
                assert_abs_diff_eq!(deviation, 1.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_orthogonal_director_rejected() {
        let tilted = Vec3::new(1.0, 0.0, 1.0).normalize();
        let err = build_ruled(
            Curve::line(Vec3::zeros(), Vec3::x()),
            Curve::constant(tilted),
            (0.0, 1.0),
            (0.0, 1.0),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::NormalizationViolation {
                condition: "<alpha', beta> = 0",
                ..
            }
        ));
    }

    #[test]
    fn ruled_derivatives_are_consistent() {
        let rs = build_ruled(circle(), Curve::constant(Vec3::z()), (0.0, 1.0), (0.0, 1.0)).unwrap();
        let s = rs.to_parametric();
        let j = s.jet(0.0, 0.5);
        let forms = crate::geometry::FundamentalForms::from_jet(&j, 0.0, 0.5).unwrap();
        assert_abs_diff_eq!(forms.first.f, 0.0);
        assert_abs_diff_eq!(forms.first.g, 1.0);
        assert_abs_diff_eq!(forms.second.g, 0.0);
    }
}
