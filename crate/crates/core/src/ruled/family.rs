//! Constructors for the ruled minimal surfaces of `e^z`: vertical planes and the
//! cylindrical family with constant director `β = (0, b, c)`.

use nalgebra::Rotation3;

use super::surface::{build_ruled, Curve, CurveJet, RuledSurface};
use crate::error::{Error, Result};
use crate::geometry::Domain;
use crate::Vec3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylindricalFamilyParams {
    /// Integration constant, `A > 0`.
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Rotation about the z-axis applied after construction (radians).
    pub rot_z: f64,
    pub shift: Vec3,
}

impl CylindricalFamilyParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = Self {
            a,
            b,
            c,
            rot_z: 0.0,
            shift: Vec3::zeros(),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_motion(mut self, rot_z: f64, shift: Vec3) -> Self {
        self.rot_z = rot_z;
        self.shift = shift;
        self
    }

    pub fn validate(&self) -> Result<()> {
        validate_abc(self.a, self.b, self.c)?;
        if !self.rot_z.is_finite() || !self.shift.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParams("rigid motion must be finite".into()));
        }
        Ok(())
    }

    /// `B = 2√A`, fixed by unit speed of the directrix.
    pub fn b_constant(&self) -> f64 {
        2.0 * self.a.sqrt()
    }

    pub fn director(&self) -> Vec3 {
        Vec3::new(0.0, self.b, self.c)
    }
}

fn validate_abc(a: f64, b: f64, c: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidParams(format!("A must be positive, got {a}")));
    }
    if !(b.is_finite() && c.is_finite()) || (b * b + c * c - 1.0).abs() >= 1e-12 {
        return Err(Error::InvalidParams(format!(
            "(b, c) must be a unit vector, got ({b}, {c})"
        )));
    }
    if b == 0.0 {
        return Err(Error::UseVerticalPlane);
    }
    Ok(())
}

/// Directrix of the family before any rigid motion:
///
/// ```text
/// x = (2/b) atan(√A e^{bu})
/// z = log(e^{-bu} + A e^{bu})
/// y = -(c/b) z
/// ```
fn directrix_jet(a: f64, b: f64, c: f64, u: f64) -> CurveJet {
    let w = (b * u).exp();
    let q = a * w * w;
    let sa = a.sqrt();
    let one_q = 1.0 + q;

    let x = (2.0 / b) * (sa * w).atan();
    let x1 = 2.0 * sa * w / one_q;
    let x2 = 2.0 * sa * b * w * (1.0 - q) / (one_q * one_q);

    let z = -b * u + q.ln_1p();
    let z1 = b * (q - 1.0) / one_q;
    let z2 = 4.0 * b * b * q / (one_q * one_q);

    let k = -c / b;
    CurveJet {
        pos: Vec3::new(x, k * z, z),
        d1: Vec3::new(x1, k * z1, z1),
        d2: Vec3::new(x2, k * z2, z2),
    }
}

/// Position and velocity of the family's directrix (no rotation or shift).
/// It lies in the plane `by + cz = 0` and has unit speed identically.
pub fn closed_form_directrix(a: f64, b: f64, c: f64, u: f64) -> Result<(Vec3, Vec3)> {
    validate_abc(a, b, c)?;
    let j = directrix_jet(a, b, c, u);
    Ok((j.pos, j.d1))
}

pub fn make_cylindrical_minimal(
    p: &CylindricalFamilyParams,
    domain: Domain,
) -> Result<RuledSurface> {
    p.validate()?;
    let (a, b, c) = (p.a, p.b, p.c);
    let alpha = Curve::new(move |u| directrix_jet(a, b, c, u));
    let beta = Curve::constant(p.director());
    let rs = build_ruled(alpha, beta, domain.u, domain.v)?;
    Ok(rs.transformed(
        Rotation3::from_axis_angle(&Vec3::z_axis(), p.rot_z),
        p.shift,
    ))
}

/// The plane through `through` spanned by the horizontal unit vector
/// `(d₁, d₂, 0)` and the z-axis.
pub fn make_vertical_plane(
    direction: (f64, f64),
    through: Vec3,
    domain: Domain,
) -> Result<RuledSurface> {
    let d = Vec3::new(direction.0, direction.1, 0.0);
    let n = d.norm();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::InvalidParams(
            "vertical plane needs a nonzero direction".into(),
        ));
    }
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParams(format!(
            "vertical plane direction must be a unit vector, |d| = {n}"
        )));
    }
    build_ruled(
        Curve::line(through, d),
        Curve::constant(Vec3::z()),
        domain.u,
        domain.v,
    )
}
