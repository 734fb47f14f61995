//! The four polynomial-coefficient conditions equivalent to `Hphi ≡ 0` on a
//! ruled surface under a log-linear density, and the negative-control catalog
//! of noncylindrical ruled surfaces.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::surface::{build_ruled, Curve, CurveJet, RuledSurface};
use crate::error::{Error, Result};
use crate::geometry::{fundamental_forms, DensityField, Domain, ParametricSurface};
use crate::profile::{Jet1, Profile, RandomSmooth};
use crate::Vec3;

/// Residuals of the coefficients of `v⁰, v¹, v², v³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub r4: f64,
}

impl Residuals {
    pub fn as_array(&self) -> [f64; 4] {
        [self.r1, self.r2, self.r3, self.r4]
    }

    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    pub fn sum_abs(&self) -> f64 {
        self.as_array().iter().map(|r| r.abs()).sum()
    }
}

pub fn coefficient_residuals(
    rs: &RuledSurface,
    density: &DensityField,
    u: f64,
) -> Result<Residuals> {
    let grad = density
        .constant_gradient()
        .ok_or(Error::NonConstantGradient)?;
    let a = rs.alpha().eval(u);
    let b = rs.beta().eval(u);

    let p = a.d1.cross(&b.pos);
    let q = b.d1.cross(&b.pos);
    let k = a.d1.dot(&b.d1);
    let m = b.d1.norm_squared();
    let p_grad = p.dot(&grad);
    let q_grad = q.dot(&grad);

    Ok(Residuals {
        r1: p.dot(&a.d2) - p_grad,
        r2: p.dot(&b.d2) + q.dot(&a.d2) - q_grad - 2.0 * k * p_grad,
        r3: q.dot(&b.d2) - 2.0 * k * q_grad - m * p_grad,
        r4: m * q_grad,
    })
}

/// Componentwise max of `|r_i|` over `n` evenly spaced `u`, skipping parameters
/// where `|β'| < min_director_speed`.
pub fn max_residuals(
    rs: &RuledSurface,
    density: &DensityField,
    n: usize,
    min_director_speed: f64,
) -> Result<[f64; 4]> {
    let mut worst = [0.0_f64; 4];
    for u in rs.domain().u_samples(n) {
        if rs.beta().eval(u).d1.norm() < min_director_speed {
            continue;
        }
        let r = coefficient_residuals(rs, density, u)?.as_array();
        for (w, x) in worst.iter_mut().zip(r) {
            *w = w.max(x.abs());
        }
    }
    Ok(worst)
}

/// True if the surface lies in a plane containing the vertical direction:
/// sampled unit normals all agree (up to sign) and are horizontal.
pub fn is_vertical_plane(surface: &ParametricSurface, n: usize, tol: f64) -> Result<bool> {
    let grid = surface.domain().grid(n, n);
    let (u0, v0) = grid[0];
    let n0 = fundamental_forms(surface, u0, v0)?.normal;
    let p0 = surface.point(u0, v0);
    if n0.z.abs() > tol {
        return Ok(false);
    }
    for (u, v) in grid {
        let nn = fundamental_forms(surface, u, v)?.normal;
        if n0.cross(&nn).norm() > tol || (surface.point(u, v) - p0).dot(&n0).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Unit-sphere director `β = (cos t cos s, cos t sin s, sin t)` with directrix
/// tangent `α' = cos θ e₁ + sin θ e₂`, where `e₁ = (−sin s, cos s, 0)` and
/// `e₂ = β ∧ e₁`. The directrix itself is `∫₀ᵘ α'` (Gauss–Legendre).
pub fn spherical_ruled(
    t: Profile,
    s: Profile,
    theta: Profile,
    domain: Domain,
) -> Result<RuledSurface> {
    let frame = move |u: f64| director_frame(&t.eval(u), &s.eval(u), &theta.eval(u));
    let f1 = frame.clone();
    let beta = Curve::new(move |u| f1(u).0);
    let alpha = Curve::new(move |u| {
        let (_, tangent) = frame(u);
        CurveJet {
            pos: integrate_vec(|w| frame(w).1.pos, 0.0, u),
            d1: tangent.pos,
            d2: tangent.d1,
        }
    });
    build_ruled(alpha, beta, domain.u, domain.v)
}

/// Returns `(β jet, α' jet)`; only `pos` and `d1` of the second are meaningful.
fn director_frame(t: &Jet1, s: &Jet1, th: &Jet1) -> (CurveJet, CurveJet) {
    let (st, ct) = t.value.sin_cos();
    let (ss, cs) = s.value.sin_cos();
    let beta = Vec3::new(ct * cs, ct * ss, st);
    let b_s = Vec3::new(-ct * ss, ct * cs, 0.0);
    let b_t = Vec3::new(-st * cs, -st * ss, ct);
    let b_ss = Vec3::new(-ct * cs, -ct * ss, 0.0);
    let b_st = Vec3::new(st * ss, -st * cs, 0.0);
    let b_tt = -beta;
    let d1 = b_s * s.d1 + b_t * t.d1;
    let d2 = b_ss * (s.d1 * s.d1)
        + b_st * (2.0 * s.d1 * t.d1)
        + b_tt * (t.d1 * t.d1)
        + b_s * s.d2
        + b_t * t.d2;

    let e1 = Vec3::new(-ss, cs, 0.0);
    let e1_d = Vec3::new(-cs, -ss, 0.0) * s.d1;
    let e2 = beta.cross(&e1);
    let e2_d = d1.cross(&e1) + beta.cross(&e1_d);
    let (sth, cth) = th.value.sin_cos();
    let tangent = cth * e1 + sth * e2;
    let tangent_d = th.d1 * (-sth * e1 + cth * e2) + cth * e1_d + sth * e2_d;

    (
        CurveJet { pos: beta, d1, d2 },
        CurveJet {
            pos: tangent,
            d1: tangent_d,
            d2: Vec3::zeros(),
        },
    )
}

fn integrate_vec<F: Fn(f64) -> Vec3>(f: F, a: f64, b: f64) -> Vec3 {
    const NODES: [f64; 5] = [
        0.0,
        -0.538_469_310_105_683_1,
        0.538_469_310_105_683_1,
        -0.906_179_845_938_664,
        0.906_179_845_938_664,
    ];
    const WEIGHTS: [f64; 5] = [
        0.568_888_888_888_888_9,
        0.478_628_670_499_366_5,
        0.478_628_670_499_366_5,
        0.236_926_885_056_189_1,
        0.236_926_885_056_189_1,
    ];
    let pieces = 16;
    let h = (b - a) / pieces as f64;
    let mut total = Vec3::zeros();
    for k in 0..pieces {
        let mid = a + (k as f64 + 0.5) * h;
        for (x, w) in NODES.iter().zip(WEIGHTS) {
            total += f(mid + 0.5 * h * x) * (w * 0.5 * h);
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub max_residuals: [f64; 4],
    pub vertical_plane: bool,
}

impl SuiteEntry {
    /// Violates at least one coefficient condition beyond [`SUITE_TOL`].
    pub fn violates(&self) -> bool {
        self.max_residuals.iter().any(|r| *r > SUITE_TOL)
    }

    pub fn max_residual(&self) -> f64 {
        self.max_residuals.iter().fold(0.0, |m, r| m.max(*r))
    }
}

/// Threshold above which a residual counts as a violation.
pub const SUITE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    /// Entries that satisfy every condition without being vertical planes.
    pub fn counterexamples(&self) -> Vec<&SuiteEntry> {
        self.entries
            .iter()
            .filter(|e| !e.vertical_plane && !e.violates())
            .collect()
    }

    pub fn entry(&self, name: &str) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Helicoid `α = (0, 0, u)`, `β = (cos u, sin u, 0)`.
pub fn helicoid_ruled(domain: Domain) -> Result<RuledSurface> {
    build_ruled(
        Curve::line(Vec3::zeros(), Vec3::z()),
        Curve::new(|u| {
            let (s, c) = u.sin_cos();
            CurveJet {
                pos: Vec3::new(c, s, 0.0),
                d1: Vec3::new(-s, c, 0.0),
                d2: Vec3::new(-c, -s, 0.0),
            }
        }),
        domain.u,
        domain.v,
    )
}

/// Named noncylindrical ruled surfaces, plus two vertical planes as controls.
pub fn noncylindrical_catalog() -> Result<Vec<(&'static str, RuledSurface)>> {
    let dom = Domain::new((-1.0, 1.0), (-1.0, 1.0));

    // β on a great circle whose plane misses the z-axis; α' is the plane's normal.
    let kappa: f64 = 0.5;
    let (sk, ck) = kappa.sin_cos();
    let tilted_axis = Vec3::new(0.0, ck, sk);
    let tilted = build_ruled(
        Curve::line(Vec3::zeros(), Vec3::new(0.0, -sk, ck)),
        Curve::new(move |u| {
            let (s, c) = u.sin_cos();
            CurveJet {
                pos: c * Vec3::x() + s * tilted_axis,
                d1: -s * Vec3::x() + c * tilted_axis,
                d2: -c * Vec3::x() - s * tilted_axis,
            }
        }),
        dom.u,
        dom.v,
    )?;

    let wobble = spherical_ruled(
        Profile::new(|u| {
            let (s, c) = (2.0 * u).sin_cos();
            Jet1 {
                value: 0.4 * s,
                d1: 0.8 * c,
                d2: -1.6 * s,
            }
        }),
        Profile::affine(1.0, 0.0),
        Profile::affine(0.0, 0.3),
        dom,
    )?;

    let meridian = |u: f64| {
        let (s, c) = u.sin_cos();
        CurveJet {
            pos: Vec3::new(c, 0.0, s),
            d1: Vec3::new(-s, 0.0, c),
            d2: Vec3::new(-c, 0.0, -s),
        }
    };
    let xz_plane = build_ruled(
        Curve::new(meridian),
        Curve::new(meridian),
        (-1.0, 1.0),
        (0.0, 1.0),
    )?;

    Ok(vec![
        ("helicoid", helicoid_ruled(dom)?),
        ("spherical-wobble", wobble),
        ("tilted-great-circle", tilted),
        (
            "vertical-plane",
            build_ruled(
                Curve::line(Vec3::zeros(), Vec3::x()),
                Curve::constant(Vec3::z()),
                dom.u,
                dom.v,
            )?,
        ),
        ("meridian-plane", xz_plane),
    ])
}

/// Residuals of every catalog entry under `density` (log-linear), sampled at 33 `u`.
pub fn noncylindrical_counterexample_suite(density: &DensityField) -> Result<SuiteReport> {
    let mut entries = Vec::new();
    for (name, rs) in noncylindrical_catalog()? {
        entries.push(SuiteEntry {
            name,
            max_residuals: max_residuals(&rs, density, 33, 1e-6)?,
            vertical_plane: is_vertical_plane(&rs.to_parametric(), 9, 1e-9)?,
        });
    }
    Ok(SuiteReport { entries })
}

/// Random noncylindrical ruled surface on `[-1, 1]²` built by [`spherical_ruled`].
pub fn random_noncylindrical<R: rand::Rng + ?Sized>(rng: &mut R) -> Result<RuledSurface> {
    let t = RandomSmooth::sample(rng).to_profile();
    let s = RandomSmooth::sample(rng).to_profile();
    let theta = RandomSmooth::sample(rng).to_profile();
    spherical_ruled(t, s, theta, Domain::new((-1.0, 1.0), (-1.0, 1.0)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FalsificationReport {
    pub samples: usize,
    pub counterexamples: usize,
    /// Smallest per-surface max residual seen among non-plane samples.
    pub smallest_violation: f64,
}

/// Draws `count` random noncylindrical ruled surfaces and counts those that
/// satisfy every coefficient condition without being vertical planes.
pub fn ruled_falsification_search(
    density: &DensityField,
    seed: u64,
    count: usize,
) -> Result<FalsificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = 0;
    let mut smallest_violation = f64::INFINITY;
    for _ in 0..count {
        let rs = random_noncylindrical(&mut rng)?;
        let worst = max_residuals(&rs, density, 33, 1e-6)?
            .iter()
            .fold(0.0_f64, |m, r| m.max(*r));
        if is_vertical_plane(&rs.to_parametric(), 9, 1e-9)? {
            continue;
        }
        smallest_violation = smallest_violation.min(worst);
        if worst <= SUITE_TOL {
            counterexamples += 1;
        }
    }
    Ok(FalsificationReport {
        samples: count,
        counterexamples,
        smallest_violation,
    })
}
