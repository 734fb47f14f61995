//! Parametric surfaces `X(u, v)` over a rectangle, with analytic or
//! finite-difference derivatives.

use std::fmt;
use std::sync::Arc;

use nalgebra::Rotation3;

use crate::Vec3;

/// Position plus first and second partial derivatives at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub x: Vec3,
    pub xu: Vec3,
    pub xv: Vec3,
    pub xuu: Vec3,
    pub xuv: Vec3,
    pub xvv: Vec3,
}

impl SurfaceJet {
    fn map(&self, f: impl Fn(&Vec3) -> Vec3, shift: Vec3) -> Self {
        Self {
            x: f(&self.x) + shift,
            xu: f(&self.xu),
            xv: f(&self.xv),
            xuu: f(&self.xuu),
            xuv: f(&self.xuv),
            xvv: f(&self.xvv),
        }
    }
}

/// Closed rectangle `[u0, u1] × [v0, v1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub u: (f64, f64),
    pub v: (f64, f64),
}

impl Domain {
    pub fn new(u: (f64, f64), v: (f64, f64)) -> Self {
        Self { u, v }
    }

    pub fn unit_square() -> Self {
        Self::new((0.0, 1.0), (0.0, 1.0))
    }

    pub fn area(&self) -> f64 {
        (self.u.1 - self.u.0) * (self.v.1 - self.v.0)
    }

    /// `n ≥ 2` evenly spaced values including both endpoints.
    pub fn u_samples(&self, n: usize) -> Vec<f64> {
        linspace(self.u.0, self.u.1, n)
    }

    pub fn v_samples(&self, n: usize) -> Vec<f64> {
        linspace(self.v.0, self.v.1, n)
    }

    /// Uniform `nu × nv` grid including the boundary, row-major with `u` outer.
    pub fn grid(&self, nu: usize, nv: usize) -> Vec<(f64, f64)> {
        let us = self.u_samples(nu);
        let vs = self.v_samples(nv);
        us.iter()
            .flat_map(|&u| vs.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// Centers of an `nu × nv` partition into equal cells, row-major with `u` outer.
    pub fn cell_centers(&self, nu: usize, nv: usize) -> Vec<(f64, f64)> {
        let du = (self.u.1 - self.u.0) / nu as f64;
        let dv = (self.v.1 - self.v.0) / nv as f64;
        (0..nu)
            .flat_map(|i| {
                (0..nv).map(move |j| {
                    (
                        self.u.0 + (i as f64 + 0.5) * du,
                        self.v.0 + (j as f64 + 0.5) * dv,
                    )
                })
            })
            .collect()
    }
}

pub(crate) fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

pub type PointFn = Arc<dyn Fn(f64, f64) -> Vec3 + Send + Sync>;
pub type JetFn = Arc<dyn Fn(f64, f64) -> SurfaceJet + Send + Sync>;

/// Central differences: 3-point first derivatives and second differences,
/// both `O(step²)`, all with the same step.
pub fn fd_derivatives<F>(x: F, u: f64, v: f64, step: f64) -> SurfaceJet
where
    F: Fn(f64, f64) -> Vec3,
{
    fd_derivatives_split(x, u, v, step, step)
}

/// As [`fd_derivatives`] with separate steps for first and second derivatives.
pub fn fd_derivatives_split<F>(x: F, u: f64, v: f64, h1: f64, h2: f64) -> SurfaceJet
where
    F: Fn(f64, f64) -> Vec3,
{
    let x0 = x(u, v);
    let xu = (x(u + h1, v) - x(u - h1, v)) / (2.0 * h1);
    let xv = (x(u, v + h1) - x(u, v - h1)) / (2.0 * h1);

    let h2sq = h2 * h2;
    let xuu = (x(u + h2, v) - 2.0 * x0 + x(u - h2, v)) / h2sq;
    let xvv = (x(u, v + h2) - 2.0 * x0 + x(u, v - h2)) / h2sq;
    let xuv = (x(u + h2, v + h2) - x(u + h2, v - h2) - x(u - h2, v + h2) + x(u - h2, v - h2))
        / (4.0 * h2sq);

    SurfaceJet {
        x: x0,
        xu,
        xv,
        xuu,
        xuv,
        xvv,
    }
}

/// Default finite-difference steps at `(u, v)`: `1e-5` (first) and `1e-4` (second),
/// each scaled by `max(1, |u|, |v|)`.
pub fn default_fd_steps(u: f64, v: f64) -> (f64, f64) {
    let scale = 1.0_f64.max(u.abs()).max(v.abs());
    (1e-5 * scale, 1e-4 * scale)
}

#[derive(Clone)]
pub struct ParametricSurface {
    point: PointFn,
    jet: Option<JetFn>,
    domain: Domain,
}

impl fmt::Debug for ParametricSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricSurface")
            .field("domain", &self.domain)
            .field("analytic", &self.jet.is_some())
            .finish()
    }
}

impl ParametricSurface {
    /// A surface known only through its point map; derivatives come from finite differences.
    pub fn from_points<F>(domain: Domain, point: F) -> Self
    where
        F: Fn(f64, f64) -> Vec3 + Send + Sync + 'static,
    {
        Self {
            point: Arc::new(point),
            jet: None,
            domain,
        }
    }

    /// A surface with analytic derivatives.
    pub fn analytic<F>(domain: Domain, jet: F) -> Self
    where
        F: Fn(f64, f64) -> SurfaceJet + Send + Sync + 'static,
    {
        let jet: JetFn = Arc::new(jet);
        let j = jet.clone();
        Self {
            point: Arc::new(move |u, v| j(u, v).x),
            jet: Some(jet),
            domain,
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn with_domain(&self, domain: Domain) -> Self {
        Self {
            domain,
            ..self.clone()
        }
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.jet.is_some()
    }

    pub fn point(&self, u: f64, v: f64) -> Vec3 {
        (self.point)(u, v)
    }

    pub fn point_fn(&self) -> PointFn {
        self.point.clone()
    }

    pub fn jet(&self, u: f64, v: f64) -> SurfaceJet {
        match &self.jet {
            Some(jet) => jet(u, v),
            None => self.fd_jet(u, v),
        }
    }

    pub fn fd_jet(&self, u: f64, v: f64) -> SurfaceJet {
        let (h1, h2) = default_fd_steps(u, v);
        fd_derivatives_split(|a, b| self.point(a, b), u, v, h1, h2)
    }

    /// Same point map with the analytic derivatives discarded.
    pub fn finite_difference_view(&self) -> Self {
        Self {
            point: self.point.clone(),
            jet: None,
            domain: self.domain,
        }
    }

    /// `x ↦ R x + shift` applied to the surface.
    pub fn transformed(&self, rotation: Rotation3<f64>, shift: Vec3) -> Self {
        let point = self.point.clone();
        let new_point: PointFn = Arc::new(move |u, v| rotation * point(u, v) + shift);
        let jet = self
            .jet
            .clone()
            .map(|jet| -> JetFn { Arc::new(move |u, v| jet(u, v).map(|w| rotation * w, shift)) });
        Self {
            point: new_point,
            jet,
            domain: self.domain,
        }
    }

    /// Rotation by `angle` about the z-axis followed by a translation.
    pub fn rotated_z(&self, angle: f64, shift: Vec3) -> Self {
        self.transformed(Rotation3::from_axis_angle(&Vec3::z_axis(), angle), shift)
    }

    /// Exchanges the roles of `u` and `v`, which reverses the normal.
    pub fn swapped(&self) -> Self {
        let point = self.point.clone();
        let jet = self.jet.clone().map(|jet| -> JetFn {
            Arc::new(move |u, v| {
                let j = jet(v, u);
                SurfaceJet {
                    x: j.x,
                    xu: j.xv,
                    xv: j.xu,
                    xuu: j.xvv,
                    xuv: j.xuv,
                    xvv: j.xuu,
                }
            })
        });
        Self {
            point: Arc::new(move |u, v| point(v, u)),
            jet,
            domain: Domain::new(self.domain.v, self.domain.u),
        }
    }

    /// Largest relative disagreement between analytic and finite-difference
    /// derivatives over an `nu × nv` grid. Zero for surfaces without analytic derivatives.
    pub fn derivative_mismatch(&self, nu: usize, nv: usize) -> f64 {
        if self.jet.is_none() {
            return 0.0;
        }
        let mut worst = 0.0_f64;
        for (u, v) in self.domain.grid(nu, nv) {
            let a = self.jet(u, v);
            let n = self.fd_jet(u, v);
            for (x, y) in [
                (a.xu, n.xu),
                (a.xv, n.xv),
                (a.xuu, n.xuu),
                (a.xuv, n.xuv),
                (a.xvv, n.xvv),
            ] {
                worst = worst.max((x - y).norm() / x.norm().max(1.0));
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn fd_exact_on_quadratic() {
        let j = fd_derivatives(|u, v| Vec3::new(u, v, u * u), 0.3, -0.7, 1e-4);
        assert_abs_diff_eq!(j.xuu, Vec3::new(0.0, 0.0, 2.0), epsilon = 1e-6);
        assert_abs_diff_eq!(j.xu, Vec3::new(1.0, 0.0, 0.6), epsilon = 1e-8);
        assert_abs_diff_eq!(j.xuv.norm(), 0.0, epsilon = 1e-6);
    }

    #[test]
    fn fd_plane_has_no_second_derivatives() {
        let j = fd_derivatives(|u, v| Vec3::new(u, v, 0.0), 1.0, 2.0, 1e-4);
        for d in [j.xuu, j.xuv, j.xvv] {
            assert_abs_diff_eq!(d, Vec3::zeros(), epsilon = 1e-6);
        }
    }

    #[test]
    fn fd_helicoid_mixed_derivative() {
        // Xuv = (-sin v, cos v, 0) = (0, 1, 0) at (1, 0).
        let j = fd_derivatives(
            |u, v| Vec3::new(u * v.cos(), u * v.sin(), v),
            1.0,
            0.0,
            1e-4,
        );
        assert_abs_diff_eq!(j.xuv, Vec3::new(0.0, 1.0, 0.0), epsilon = 1e-6);
    }

    #[test]
    fn grid_is_row_major_u_outer() {
        let g = Domain::unit_square().grid(2, 3);
        assert_eq!(
            g,
            vec![
                (0.0, 0.0),
                (0.0, 0.5),
                (0.0, 1.0),
                (1.0, 0.0),
                (1.0, 0.5),
                (1.0, 1.0)
            ]
        );
    }

    #[test]
    fn analytic_helicoid_matches_fd() {
        let s = ParametricSurface::analytic(Domain::new((-1.0, 1.0), (0.0, 3.0)), |u, v| {
            let (sv, cv) = v.sin_cos();
            SurfaceJet {
                x: Vec3::new(u * cv, u * sv, v),
                xu: Vec3::new(cv, sv, 0.0),
                xv: Vec3::new(-u * sv, u * cv, 1.0),
                xuu: Vec3::zeros(),
                xuv: Vec3::new(-sv, cv, 0.0),
                xvv: Vec3::new(-u * cv, -u * sv, 0.0),
            }
        });
        assert!(s.derivative_mismatch(7, 7) < 1e-5);
    }
}
