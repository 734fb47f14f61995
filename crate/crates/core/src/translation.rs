//! Translation surfaces `X(u, v) = (u, v, g(u) + h(v))` under the density `e^z`.
//!
//! Minimality reduces to
//!
//! ```text
//! g''(1 + h'²) + h''(1 + g'²) = 1 + g'² + h'²
//! ```
//!
//! and every solution has an affine summand. With `h(v) = cv + d` the other summand is
//! `g(u) = −(1 + c²) log|cos((u + D)/√(1 + c²))|`.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Matrix3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Domain, ParametricSurface, SurfaceJet};
use crate::profile::{Jet1, Profile, RandomSmooth};
use crate::ruled::{build_ruled, Curve, CurveJet, FalsificationReport, RuledSurface};
use crate::Vec3;

const VALIDATION_SAMPLES: usize = 33;
const DERIVATIVE_TOL: f64 = 1e-6;

/// Grid residual below which a translation surface counts as minimal.
pub const TOL_MIN: f64 = 1e-6;
/// `max |f''|` below which a summand counts as affine.
pub const TOL_AFFINE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct TranslationSurface {
    g: Profile,
    h: Profile,
    domain: Domain,
    d_shift: f64,
}

fn check_profile(name: &str, f: &Profile, range: (f64, f64)) -> Result<()> {
    for t in crate::geometry::surface::linspace(range.0, range.1, VALIDATION_SAMPLES) {
        let scale = t.abs().max(1.0);
        let (h1, h2) = (1e-5 * scale, 1e-4 * scale);
        let j = f.eval(t);
        let d1 = (f.value(t + h1) - f.value(t - h1)) / (2.0 * h1);
        let d2 = (f.eval(t + h2).d1 - f.eval(t - h2).d1) / (2.0 * h2);
        for (which, supplied, numeric) in [("'", j.d1, d1), ("''", j.d2, d2)] {
            if !((supplied - numeric).abs() <= DERIVATIVE_TOL * supplied.abs().max(1.0)) {
                return Err(Error::DerivativeMismatch {
                    which: format!("{name}{which}"),
                    at: t,
                    supplied,
                    numeric,
                });
            }
        }
    }
    Ok(())
}

/// Validates the supplied derivatives of `g` and `h` against finite differences.
pub fn build_translation(g: Profile, h: Profile, domain: Domain) -> Result<TranslationSurface> {
    check_profile("g", &g, domain.u)?;
    check_profile("h", &h, domain.v)?;
    Ok(TranslationSurface {
        g,
        h,
        domain,
        d_shift: 0.0,
    })
}

impl TranslationSurface {
    pub fn g(&self) -> &Profile {
        &self.g
    }

    pub fn h(&self) -> &Profile {
        &self.h
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The constant `d` of an affine `h(v) = cv + d` (zero unless built by
    /// [`make_translation_minimal`]).
    pub fn d_shift(&self) -> f64 {
        self.d_shift
    }

    pub fn point(&self, u: f64, v: f64) -> Vec3 {
        Vec3::new(u, v, self.g.value(u) + self.h.value(v))
    }

    pub fn to_parametric(&self) -> ParametricSurface {
        let (g, h) = (self.g.clone(), self.h.clone());
        ParametricSurface::analytic(self.domain, move |u, v| {
            let gj = g.eval(u);
            let hj = h.eval(v);
            SurfaceJet {
                x: Vec3::new(u, v, gj.value + hj.value),
                xu: Vec3::new(1.0, 0.0, gj.d1),
                xv: Vec3::new(0.0, 1.0, hj.d1),
                xuu: Vec3::new(0.0, 0.0, gj.d2),
                xuv: Vec3::zeros(),
                xvv: Vec3::new(0.0, 0.0, hj.d2),
            }
        })
    }
}

fn residual_from(g: &Jet1, h: &Jet1) -> f64 {
    let (g1, h1) = (g.d1 * g.d1, h.d1 * h.d1);
    g.d2 * (1.0 + h1) + h.d2 * (1.0 + g1) - (1.0 + g1 + h1)
}

/// `g''(1 + h'²) + h''(1 + g'²) − (1 + g'² + h'²)`, which equals
/// `2(1 + g'² + h'²)^{3/2} Hphi` for the upward normal.
pub fn pde_residual(ts: &TranslationSurface, u: f64, v: f64) -> f64 {
    residual_from(&ts.g.eval(u), &ts.h.eval(v))
}

fn scherk_jet(c: f64, shift: f64, u: f64) -> Result<Jet1> {
    let k = (1.0 + c * c).sqrt();
    let w = (u + shift) / k;
    let (s, co) = w.sin_cos();
    if co.abs() < 1e-12 {
        return Err(Error::PoleAt { u });
    }
    Ok(Jet1 {
        value: -(k * k) * co.abs().ln(),
        d1: k * s / co,
        d2: 1.0 / (co * co),
    })
}

/// `−(1 + c²) log|cos((u + D)/√(1 + c²))|`.
pub fn scherk_density_profile(c: f64, shift: f64, u: f64) -> Result<f64> {
    scherk_jet(c, shift, u).map(|j| j.value)
}

/// The profile as a [`Profile`]. Evaluating at a pole yields non-finite values;
/// use [`first_pole`] to keep ranges inside one strip.
pub fn scherk_profile(c: f64, shift: f64) -> Profile {
    Profile::new(move |u| {
        scherk_jet(c, shift, u).unwrap_or(Jet1 {
            value: f64::INFINITY,
            d1: f64::NAN,
            d2: f64::INFINITY,
        })
    })
}

/// First pole of the profile inside `[u0, u1]`, if any.
pub fn first_pole(c: f64, shift: f64, range: (f64, f64)) -> Option<f64> {
    let k = (1.0 + c * c).sqrt();
    let (w0, w1) = ((range.0 + shift) / k, (range.1 + shift) / k);
    let n = ((w0 - FRAC_PI_2) / PI).ceil();
    let w = FRAC_PI_2 + n * PI;
    if w <= w1 {
        return Some(k * w - shift);
    }
    [range.0, range.1]
        .into_iter()
        .find(|&u| scherk_jet(c, shift, u).is_err())
}

/// `X(u, v) = (u, v, g(u) + cv + d)` with `g` the density-Scherk profile.
pub fn make_translation_minimal(
    c: f64,
    shift: f64,
    d: f64,
    domain: Domain,
) -> Result<TranslationSurface> {
    if ![c, shift, d].iter().all(|x| x.is_finite()) {
        return Err(Error::InvalidParams(
            "translation parameters must be finite".into(),
        ));
    }
    if let Some(u) = first_pole(c, shift, domain.u) {
        return Err(Error::PoleAt { u });
    }
    let mut ts = build_translation(scherk_profile(c, shift), Profile::affine(c, d), domain)?;
    ts.d_shift = d;
    Ok(ts)
}

/// Arc length `∫_{u0}^{u} σ` of a positive speed function, by composite Gauss–Legendre.
#[derive(Clone)]
struct ArcLength<F> {
    speed: F,
    origin: f64,
    end: f64,
}

impl<F: Fn(f64) -> f64> ArcLength<F> {
    fn length(&self, u: f64) -> f64 {
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
        let span = u - self.origin;
        let pieces = ((span.abs() / 0.05).ceil() as usize).max(1);
        let h = span / pieces as f64;
        let mut total = 0.0;
        for k in 0..pieces {
            let mid = self.origin + (k as f64 + 0.5) * h;
            for (x, w) in NODES.iter().zip(WEIGHTS) {
                total += w * (self.speed)(mid + 0.5 * h * x);
            }
        }
        total * 0.5 * h
    }

    /// Inverts `length` by Newton steps, falling back to bisection whenever a
    /// step leaves the current bracket. Since the speed is at least 1 the root
    /// lies within `|s|` of `origin`.
    fn inverse(&self, s: f64) -> f64 {
        let (mut lo, mut hi) = if s < 0.0 {
            (self.origin + s, self.origin)
        } else if s <= self.length(self.end) {
            (self.origin, self.end.min(self.origin + s))
        } else {
            (self.end, self.origin + s)
        };
        let mut u = 0.5 * (lo + hi);
        for _ in 0..100 {
            let f = self.length(u) - s;
            if f > 0.0 {
                hi = u;
            } else {
                lo = u;
            }
            let mut next = u - f / (self.speed)(u);
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            let delta = next - u;
            u = next;
            if delta.abs() <= 1e-15 * u.abs().max(1.0) {
                break;
            }
        }
        u
    }
}

type ParamMap = std::sync::Arc<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>;

/// A translation surface with an affine summand rewritten as a ruled surface.
#[derive(Clone)]
pub struct RuledForm {
    pub surface: RuledSurface,
    /// True when `g` was the affine summand (roles of `u` and `v` exchanged).
    pub swapped: bool,
    params: ParamMap,
}

impl std::fmt::Debug for RuledForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RuledForm")
            .field("surface", &self.surface)
            .field("swapped", &self.swapped)
            .finish_non_exhaustive()
    }
}

impl RuledForm {
    /// Ruled parameters `(s, w)` of the translation-surface point `(u, v)`.
    pub fn ruled_params(&self, u: f64, v: f64) -> (f64, f64) {
        (self.params)(u, v)
    }

    /// Director `β`.
    pub fn director(&self) -> Vec3 {
        self.surface.beta().eval(0.0).pos
    }
}

fn max_abs_d2(f: &Profile, range: (f64, f64)) -> f64 {
    crate::geometry::surface::linspace(range.0, range.1, VALIDATION_SAMPLES)
        .into_iter()
        .map(|t| f.eval(t).d2.abs())
        .fold(0.0, f64::max)
}

/// Ruled form of `(u, v, g(u) + cv + d)`: director `(0, 1, c)/√(1+c²)` and the
/// arc-length parametrized directrix obtained by projecting `(u, 0, g(u) + d)`
/// onto the plane orthogonal to the director.
fn ruled_from_affine_h(
    g: Profile,
    slope: f64,
    intercept: f64,
    domain: Domain,
) -> Result<(RuledSurface, ParamMap)> {
    let k = (1.0 + slope * slope).sqrt();
    let beta = Vec3::new(0.0, 1.0, slope) / k;
    let k2 = k * k;

    let gs = g.clone();
    let arc = ArcLength {
        speed: move |u: f64| {
            let d1 = gs.eval(u).d1;
            (1.0 + d1 * d1 / k2).sqrt()
        },
        origin: domain.u.0,
        end: domain.u.1,
    };

    // α̃(u) = γ(u) − ⟨γ(u), β⟩β with γ(u) = (u, 0, g(u) + d).
    let project = move |p: Vec3| p - p.dot(&beta) * beta;
    let arc_a = arc.clone();
    let g_a = g.clone();
    let alpha = Curve::new(move |s| {
        let u = arc_a.inverse(s);
        let j = g_a.eval(u);
        let pos = project(Vec3::new(u, 0.0, j.value + intercept));
        let t = project(Vec3::new(1.0, 0.0, j.d1));
        let t_d = project(Vec3::new(0.0, 0.0, j.d2));
        let sigma = t.norm();
        let sigma_d = t.dot(&t_d) / sigma;
        CurveJet {
            pos,
            d1: t / sigma,
            d2: (t_d / sigma - t * (sigma_d / (sigma * sigma))) / sigma,
        }
    });

    let offsets: Vec<f64> =
        crate::geometry::surface::linspace(domain.u.0, domain.u.1, VALIDATION_SAMPLES)
            .into_iter()
            .map(|u| slope * (g.value(u) + intercept) / k)
            .collect();
    let lo = offsets.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = offsets.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    let surface = build_ruled(
        alpha,
        Curve::constant(beta),
        (0.0, arc.length(domain.u.1)),
        (domain.v.0 * k + lo, domain.v.1 * k + hi),
    )?;
    let params = std::sync::Arc::new(move |u: f64, v: f64| {
        (arc.length(u), v * k + slope * (g.value(u) + intercept) / k)
    });
    Ok((surface, params))
}

/// Rewrites a translation surface with an affine summand as a ruled surface.
pub fn to_ruled(ts: &TranslationSurface) -> Result<RuledForm> {
    let max_g2 = max_abs_d2(&ts.g, ts.domain.u);
    let max_h2 = max_abs_d2(&ts.h, ts.domain.v);
    const AFFINE: f64 = 1e-8;

    if max_h2 < AFFINE {
        let v_mid = 0.5 * (ts.domain.v.0 + ts.domain.v.1);
        let hj = ts.h.eval(v_mid);
        let slope = hj.d1;
        let intercept = hj.value - slope * v_mid;
        let (surface, params) = ruled_from_affine_h(ts.g.clone(), slope, intercept, ts.domain)?;
        return Ok(RuledForm {
            surface,
            swapped: false,
            params,
        });
    }
    if max_g2 < AFFINE {
        // (u, v, g(u) + h(v)) = P (v, u, h(v) + g(u)) with P swapping x and y.
        let u_mid = 0.5 * (ts.domain.u.0 + ts.domain.u.1);
        let gj = ts.g.eval(u_mid);
        let slope = gj.d1;
        let intercept = gj.value - slope * u_mid;
        let swapped_domain = Domain::new(ts.domain.v, ts.domain.u);
        let (surface, params) =
            ruled_from_affine_h(ts.h.clone(), slope, intercept, swapped_domain)?;
        let p = Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0);
        return Ok(RuledForm {
            surface: surface.orthogonal_map(p, Vec3::zeros()),
            swapped: true,
            params: std::sync::Arc::new(move |u, v| params(v, u)),
        });
    }
    Err(Error::NotRuledForm { max_g2, max_h2 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem2Verdict {
    MinimalGAffine,
    MinimalHAffine,
    NotMinimal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Report {
    pub verdict: Theorem2Verdict,
    pub max_residual: f64,
    pub max_g2: f64,
    pub max_h2: f64,
    /// `1 − h''(v₀)`, `1 + h'²(v₀)`, `1 + h'²(v₀) − h''(v₀)` at the middle of the `v` range.
    pub slice_constants: (f64, f64, f64),
    /// `max_u |B g'' − A g'² − C|` on the slice `v = v₀`; zero iff the slice satisfies the PDE.
    pub slice_residual: f64,
}

/// Classifies `(g, h)` on an `nu × nv` grid over `domain`.
///
/// Returns [`Error::ClassificationViolated`] if the surface is minimal while
/// neither summand is affine.
pub fn theorem2_check(
    g: &Profile,
    h: &Profile,
    domain: Domain,
    nu: usize,
    nv: usize,
) -> Result<Theorem2Report> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidParams(format!(
            "grid must be at least 2x2, got {nu}x{nv}"
        )));
    }
    let us = domain.u_samples(nu);
    let vs = domain.v_samples(nv);
    let mut max_residual = 0.0_f64;
    for &u in &us {
        let gj = g.eval(u);
        for &v in &vs {
            max_residual = max_residual.max(residual_from(&gj, &h.eval(v)).abs());
        }
    }
    let max_g2 = us.iter().map(|&u| g.eval(u).d2.abs()).fold(0.0, f64::max);
    let max_h2 = vs.iter().map(|&v| h.eval(v).d2.abs()).fold(0.0, f64::max);

    let v0 = 0.5 * (domain.v.0 + domain.v.1);
    let h0 = h.eval(v0);
    let a = 1.0 - h0.d2;
    let b = 1.0 + h0.d1 * h0.d1;
    let c = b - h0.d2;
    let slice_residual = us
        .iter()
        .map(|&u| {
            let gj = g.eval(u);
            (b * gj.d2 - a * gj.d1 * gj.d1 - c).abs()
        })
        .fold(0.0, f64::max);

    let verdict = if max_residual < TOL_MIN {
        if max_h2 < TOL_AFFINE {
            Theorem2Verdict::MinimalHAffine
        } else if max_g2 < TOL_AFFINE {
            Theorem2Verdict::MinimalGAffine
        } else {
            return Err(Error::ClassificationViolated { max_residual });
        }
    } else {
        Theorem2Verdict::NotMinimal
    };
    Ok(Theorem2Report {
        verdict,
        max_residual,
        max_g2,
        max_h2,
        slice_constants: (a, b, c),
        slice_residual,
    })
}

/// Draws `count` pairs of non-affine random profiles on `[-1, 1]` and counts
/// those whose `10 × 10` grid residual falls below [`TOL_MIN`].
pub fn translation_falsification_search(seed: u64, count: usize) -> Result<FalsificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let domain = Domain::new((-1.0, 1.0), (-1.0, 1.0));
    let mut counterexamples = 0;
    let mut smallest_violation = f64::INFINITY;
    for _ in 0..count {
        let g = RandomSmooth::sample_non_affine(&mut rng, domain.u, 0.1).to_profile();
        let h = RandomSmooth::sample_non_affine(&mut rng, domain.v, 0.1).to_profile();
        match theorem2_check(&g, &h, domain, 10, 10) {
            Ok(report) => smallest_violation = smallest_violation.min(report.max_residual),
            Err(Error::ClassificationViolated { max_residual }) => {
                counterexamples += 1;
                smallest_violation = smallest_violation.min(max_residual);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(FalsificationReport {
        samples: count,
        counterexamples,
        smallest_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn square() -> Domain {
        Domain::new((-1.0, 1.0), (-1.0, 1.0))
    }

    fn euclidean_scherk() -> TranslationSurface {
        build_translation(
            Profile::new(|u: f64| {
                let (s, c) = u.sin_cos();
                Jet1 {
                    value: -c.ln(),
                    d1: s / c,
                    d2: 1.0 / (c * c),
                }
            }),
            Profile::new(|v: f64| {
                let (s, c) = v.sin_cos();
                Jet1 {
                    value: c.ln(),
                    d1: -s / c,
                    d2: -1.0 / (c * c),
                }
            }),
            square(),
        )
        .unwrap()
    }

    #[test]
    fn flat_plane_residual() {
        let ts = build_translation(Profile::zero(), Profile::zero(), square()).unwrap();
        assert_eq!(pde_residual(&ts, 0.3, -0.2), -1.0);
        assert_eq!(ts.point(0.5, 0.25), Vec3::new(0.5, 0.25, 0.0));
    }

    #[test]
    fn euclidean_scherk_is_not_weighted_minimal() {
        assert_abs_diff_eq!(
            pde_residual(&euclidean_scherk(), 0.0, 0.0),
            -1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn wrong_second_derivative_rejected() {
        let bad = Profile::new(|u| Jet1 {
            value: u * u,
            d1: 2.0 * u,
            d2: 3.0,
        });
        match build_translation(bad, Profile::zero(), square()) {
            Err(Error::DerivativeMismatch { which, .. }) => assert_eq!(which, "g''"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn profile_values() {
        assert_eq!(scherk_density_profile(1.0, 0.0, 0.0).unwrap(), 0.0);
        let ln2 = 2f64.ln();
        assert_abs_diff_eq!(
            scherk_density_profile(0.0, 0.0, PI / 3.0).unwrap(),
            ln2,
            epsilon = 1e-15
        );
        let u = 2f64.sqrt() * PI / 4.0;
        assert_abs_diff_eq!(
            scherk_density_profile(1.0, 0.0, u).unwrap(),
            ln2,
            epsilon = 1e-15
        );
        assert!(matches!(
            scherk_density_profile(0.0, 0.0, FRAC_PI_2),
            Err(Error::PoleAt { .. })
        ));
    }

    #[test]
    fn profile_satisfies_reduced_ode() {
        for &c in &[0.0, 0.5, 1.0, 2.0] {
            for &shift in &[0.0, 0.3] {
                for i in 0..21 {
                    let u = -1.0 + 0.1 * i as f64;
                    let j = scherk_jet(c, shift, u).unwrap();
                    assert_abs_diff_eq!(j.d2, 1.0 + j.d1 * j.d1 / (1.0 + c * c), epsilon = 1e-9);
                }
            }
        }
    }

    #[test]
    fn closed_form_residual_vanishes() {
        let ts = make_translation_minimal(1.0, 0.0, 0.0, square()).unwrap();
        for (u, v) in square().grid(7, 7) {
            assert_abs_diff_eq!(pde_residual(&ts, u, v), 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn pole_in_range_rejected() {
        match make_translation_minimal(0.0, 0.0, 0.0, Domain::new((-2.0, 2.0), (-1.0, 1.0))) {
            Err(Error::PoleAt { u }) => assert_abs_diff_eq!(u, -FRAC_PI_2, epsilon = 1e-12),
            other => panic!("{other:?}"),
        }
        assert!(make_translation_minimal(0.0, 0.0, 0.0, square()).is_ok());
    }

    #[test]
    fn verdicts() {
        let dom = square();
        let r = theorem2_check(
            &scherk_profile(1.0, 0.0),
            &Profile::affine(1.0, 0.0),
            dom,
            10,
            10,
        )
        .unwrap();
        assert_eq!(r.verdict, Theorem2Verdict::MinimalHAffine);
        assert!(r.slice_residual < 1e-9);

        let r = theorem2_check(
            &Profile::affine(1.0, 0.0),
            &scherk_profile(1.0, 0.0),
            dom,
            10,
            10,
        )
        .unwrap();
        assert_eq!(r.verdict, Theorem2Verdict::MinimalGAffine);

        let r = theorem2_check(&Profile::square(), &Profile::square(), dom, 11, 11).unwrap();
        assert_eq!(r.verdict, Theorem2Verdict::NotMinimal);
    }

    #[test]
    fn director_of_ruled_form() {
        let ts = make_translation_minimal(1.0, 0.0, 0.0, square()).unwrap();
        let rf = to_ruled(&ts).unwrap();
        assert!(!rf.swapped);
        let s = 0.5f64.sqrt();
        assert_abs_diff_eq!(rf.director(), Vec3::new(0.0, s, s), epsilon = 1e-15);
    }

    #[test]
    fn swapped_ruled_form() {
        let ts = build_translation(
            Profile::affine(0.5, 0.2),
            scherk_profile(0.5, 0.1),
            square(),
        )
        .unwrap();
        let rf = to_ruled(&ts).unwrap();
        assert!(rf.swapped);
        assert_abs_diff_eq!(
            rf.director(),
            Vec3::new(1.0, 0.0, 0.5) / 1.25f64.sqrt(),
            epsilon = 1e-15
        );
        for (u, v) in square().grid(5, 5) {
            let (s, w) = rf.ruled_params(u, v);
            assert_abs_diff_eq!(rf.surface.point(s, w), ts.point(u, v), epsilon = 1e-9);
        }
    }

    #[test]
    fn ruled_form_is_minimal_and_unit_speed() {
        let ts = make_translation_minimal(0.0, 0.3, 0.7, square()).unwrap();
        let rf = to_ruled(&ts).unwrap();
        let view = rf.surface.to_parametric();
        let m = view.derivative_mismatch(9, 9);
        assert!(m < 1e-5, "{m}");
        let r = crate::geometry::minimality_report(
            &view,
            &crate::geometry::DensityField::ez(),
            15,
            15,
            1e-8,
        )
        .unwrap();
        assert!(r.pass, "{}", r.max_abs_hphi);
        for u in [-1.0, 0.0, 0.9] {
            let (s, _) = rf.ruled_params(u, 0.0);
            assert_abs_diff_eq!(rf.surface.alpha().eval(s).d1.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn scherk_is_not_ruled() {
        assert!(matches!(
            to_ruled(&euclidean_scherk()),
            Err(Error::NotRuledForm { .. })
        ));
    }
}
