//! Weighted area and its first variation along normal perturbations.
//!
//! Quadrature is the midpoint rule on `nu × nv` equal cells, second order in the
//! cell size. For a normal variation `X + tψN` the pointwise identity
//! `d/dt (e^φ |Yu ∧ Yv|) = −2 Hphi ψ e^φ |Xu ∧ Xv|` holds at `t = 0`, so the
//! numeric derivative and the formula agree cell by cell up to finite-difference error.

use rayon::prelude::*;

use super::density::DensityField;
use super::forms::{curvature_from_jet, FundamentalForms};
use super::surface::ParametricSurface;
use crate::error::{Error, Result};

fn check_cells(nu: usize, nv: usize) -> Result<()> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidParams(format!(
            "quadrature needs at least 2x2 cells, got {nu}x{nv}"
        )));
    }
    Ok(())
}

/// `∫ e^φ(X) |Xu ∧ Xv| du dv` by the midpoint rule on `nu × nv` cells.
pub fn weighted_area(
    surface: &ParametricSurface,
    density: &DensityField,
    nu: usize,
    nv: usize,
) -> Result<f64> {
    check_cells(nu, nv)?;
    let domain = surface.domain();
    let cell = domain.area() / (nu * nv) as f64;
    let terms = domain
        .cell_centers(nu, nv)
        .into_par_iter()
        .map(|(u, v)| {
            let jet = surface.jet(u, v);
            let forms = FundamentalForms::from_jet(&jet, u, v)?;
            Ok(density.weight(&jet.x) * forms.area_element)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(terms.iter().sum::<f64>() * cell)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstVariation {
    /// Central difference of `t ↦ A_φ(X + tψN)` at `t = 0`.
    pub numeric_derivative: f64,
    /// `∫ −2 Hphi ψ e^φ |Xu ∧ Xv|` on the same cells.
    pub formula_value: f64,
}

impl FirstVariation {
    pub fn abs_diff(&self) -> f64 {
        (self.numeric_derivative - self.formula_value).abs()
    }

    pub fn rel_diff(&self) -> f64 {
        self.abs_diff() / self.formula_value.abs().max(self.numeric_derivative.abs())
    }
}

pub fn first_variation_check<B>(
    surface: &ParametricSurface,
    density: &DensityField,
    bump: B,
    dt: f64,
    nu: usize,
    nv: usize,
) -> Result<FirstVariation>
where
    B: Fn(f64, f64) -> f64 + Send + Sync + Clone + 'static,
{
    check_cells(nu, nv)?;
    if !(dt > 0.0) {
        return Err(Error::InvalidParams(format!(
            "dt must be positive, got {dt}"
        )));
    }

    let perturbed = |t: f64| {
        let base = surface.clone();
        let psi = bump.clone();
        ParametricSurface::from_points(surface.domain(), move |u, v| {
            let jet = base.jet(u, v);
            let n = jet.xu.cross(&jet.xv).normalize();
            jet.x + n * (t * psi(u, v))
        })
    };
    let plus = weighted_area(&perturbed(dt), density, nu, nv)?;
    let minus = weighted_area(&perturbed(-dt), density, nu, nv)?;
    let numeric_derivative = (plus - minus) / (2.0 * dt);

    let domain = surface.domain();
    let cell = domain.area() / (nu * nv) as f64;
    let terms = domain
        .cell_centers(nu, nv)
        .into_par_iter()
        .map(|(u, v)| {
            let jet = surface.jet(u, v);
            let (forms, c) = curvature_from_jet(&jet, density, u, v)?;
            Ok(-2.0 * c.h_phi * bump(u, v) * density.weight(&jet.x) * forms.area_element)
        })
        .collect::<Result<Vec<f64>>>()?;
    let formula_value = terms.iter().sum::<f64>() * cell;

    Ok(FirstVariation {
        numeric_derivative,
        formula_value,
    })
}
