//! Fixed-step RK4 integration of the directrix system for a constant director
//! `β = (0, b, c)` under `e^z`:
//!
//! ```text
//! x'' = −x'z'
//! y'' = −y'z' − cb
//! z'' = b² − z'²
//! ```
//!
//! The flow conserves `|α'|` and `⟨α', β⟩`, so unit-speed orthogonal initial data
//! stays normalized.

use super::family::closed_form_directrix;
use crate::error::{Error, Result};
use crate::Vec3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeSample {
    pub u: f64,
    pub pos: Vec3,
    pub vel: Vec3,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OdeSolution {
    pub samples: Vec<OdeSample>,
    pub step: f64,
    pub b: f64,
    pub c: f64,
    /// Integration constant when the initial data came from the closed form.
    pub a: Option<f64>,
}

type State = [f64; 6];

fn rk4_step<F: Fn(&State) -> State>(f: &F, y: &State, h: f64) -> State {
    let add = |y: &State, k: &State, s: f64| -> State {
        let mut out = *y;
        for i in 0..6 {
            out[i] += s * k[i];
        }
        out
    };
    let k1 = f(y);
    let k2 = f(&add(y, &k1, 0.5 * h));
    let k3 = f(&add(y, &k2, 0.5 * h));
    let k4 = f(&add(y, &k3, h));
    let mut out = *y;
    for i in 0..6 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Integrates from `u = 0` to `u_end` (either sign). The step is shrunk so that
/// a whole number of steps lands exactly on `u_end`.
pub fn integrate_directrix(
    b: f64,
    c: f64,
    init_pos: Vec3,
    init_vel: Vec3,
    u_end: f64,
    step: f64,
) -> Result<OdeSolution> {
    const TOL: f64 = 1e-8;
    if !(step > 0.0) || !step.is_finite() || !u_end.is_finite() {
        return Err(Error::InvalidInit(format!(
            "step must be positive and u_end finite (step {step}, u_end {u_end})"
        )));
    }
    if (b * b + c * c - 1.0).abs() > TOL {
        return Err(Error::InvalidInit(format!(
            "(b, c) = ({b}, {c}) is not a unit vector"
        )));
    }
    if (init_vel.norm() - 1.0).abs() > TOL {
        return Err(Error::InvalidInit(format!(
            "initial velocity has norm {}",
            init_vel.norm()
        )));
    }
    let beta = Vec3::new(0.0, b, c);
    if init_vel.dot(&beta).abs() > TOL {
        return Err(Error::InvalidInit(format!(
            "initial velocity not orthogonal to beta: <v, beta> = {:e}",
            init_vel.dot(&beta)
        )));
    }

    let rhs = move |s: &State| -> State {
        let (x1, y1, z1) = (s[3], s[4], s[5]);
        [x1, y1, z1, -x1 * z1, -y1 * z1 - c * b, b * b - z1 * z1]
    };

    let n = ((u_end.abs() / step).ceil() as usize).max(1);
    let h = u_end / n as f64;
    let mut y: State = [
        init_pos.x, init_pos.y, init_pos.z, init_vel.x, init_vel.y, init_vel.z,
    ];
    let mut samples = Vec::with_capacity(n + 1);
    let sample = |i: usize, y: &State| OdeSample {
        u: if i == n { u_end } else { i as f64 * h },
        pos: Vec3::new(y[0], y[1], y[2]),
        vel: Vec3::new(y[3], y[4], y[5]),
    };
    samples.push(sample(0, &y));
    for i in 1..=n {
        y = rk4_step(&rhs, &y, h);
        samples.push(sample(i, &y));
    }
    Ok(OdeSolution {
        samples,
        step: h.abs(),
        b,
        c,
        a: None,
    })
}

/// Starts from the closed-form directrix at `u = 0` and integrates to `u_end`.
pub fn integrate_from_closed_form(
    a: f64,
    b: f64,
    c: f64,
    u_end: f64,
    step: f64,
) -> Result<OdeSolution> {
    let (p0, v0) = closed_form_directrix(a, b, c, 0.0)?;
    let mut sol = integrate_directrix(b, c, p0, v0, u_end, step)?;
    sol.a = Some(a);
    Ok(sol)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormDeviation {
    /// Sup over samples of `|pos − closed form|`.
    pub position: f64,
    pub velocity: f64,
    pub x: f64,
    pub z: f64,
}

impl OdeSolution {
    /// Sup over samples of `||α'| − 1|`.
    pub fn speed_drift(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| (s.vel.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Sup over samples of `|by + cz − (by₀ + cz₀)|`.
    pub fn plane_drift(&self) -> f64 {
        let level = |p: &Vec3| self.b * p.y + self.c * p.z;
        let l0 = level(&self.samples[0].pos);
        self.samples
            .iter()
            .map(|s| (level(&s.pos) - l0).abs())
            .fold(0.0, f64::max)
    }

    pub fn closed_form_deviation(&self, a: f64) -> Result<ClosedFormDeviation> {
        let mut d = ClosedFormDeviation {
            position: 0.0,
            velocity: 0.0,
            x: 0.0,
            z: 0.0,
        };
        for s in &self.samples {
            let (p, v) = closed_form_directrix(a, self.b, self.c, s.u)?;
            d.position = d.position.max((s.pos - p).norm());
            d.velocity = d.velocity.max((s.vel - v).norm());
            d.x = d.x.max((s.pos.x - p.x).abs());
            d.z = d.z.max((s.pos.z - p.z).abs());
        }
        Ok(d)
    }
}
