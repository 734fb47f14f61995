//! Scalar profiles of one variable carrying value, first and second derivative.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet1 {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

#[derive(Clone)]
pub struct Profile(Arc<dyn Fn(f64) -> Jet1 + Send + Sync>);

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Profile(..)")
    }
}

impl Profile {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(f64) -> Jet1 + Send + Sync + 'static,
    {
        Self(Arc::new(f))
    }

    /// `t ↦ slope·t + intercept`.
    pub fn affine(slope: f64, intercept: f64) -> Self {
        Self::new(move |t| Jet1 {
            value: slope * t + intercept,
            d1: slope,
            d2: 0.0,
        })
    }

    pub fn zero() -> Self {
        Self::affine(0.0, 0.0)
    }

    /// `t ↦ t²`.
    pub fn square() -> Self {
        Self::new(|t| Jet1 {
            value: t * t,
            d1: 2.0 * t,
            d2: 2.0,
        })
    }

    pub fn eval(&self, t: f64) -> Jet1 {
        (self.0)(t)
    }

    pub fn value(&self, t: f64) -> f64 {
        self.eval(t).value
    }
}

/// `c0 + c1 t + c2 t² + c3 t³ + amp·sin(freq·t + phase)` with exact derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSmooth {
    pub poly: [f64; 4],
    pub amp: f64,
    pub freq: f64,
    pub phase: f64,
}

impl RandomSmooth {
    /// Coefficients, amplitude and frequency uniform in `[-2, 2]`, phase in `[-π, π]`.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut coef = || rng.random_range(-2.0..=2.0);
        let poly = [coef(), coef(), coef(), coef()];
        let amp = coef();
        let freq = coef();
        let phase = rng.random_range(-std::f64::consts::PI..=std::f64::consts::PI);
        Self {
            poly,
            amp,
            freq,
            phase,
        }
    }

    /// Draws until `max |f''|` over `n` samples of `range` is at least `min_curvature`.
    pub fn sample_non_affine<R: Rng + ?Sized>(
        rng: &mut R,
        range: (f64, f64),
        min_curvature: f64,
    ) -> Self {
        loop {
            let f = Self::sample(rng);
            if f.max_abs_d2(range, 33) >= min_curvature {
                return f;
            }
        }
    }

    pub fn jet(&self, t: f64) -> Jet1 {
        let [c0, c1, c2, c3] = self.poly;
        let (s, c) = (self.freq * t + self.phase).sin_cos();
        Jet1 {
            value: c0 + t * (c1 + t * (c2 + t * c3)) + self.amp * s,
            d1: c1 + t * (2.0 * c2 + 3.0 * c3 * t) + self.amp * self.freq * c,
            d2: 2.0 * c2 + 6.0 * c3 * t - self.amp * self.freq * self.freq * s,
        }
    }

    pub fn max_abs_d2(&self, range: (f64, f64), n: usize) -> f64 {
        crate::geometry::surface::linspace(range.0, range.1, n)
            .into_iter()
            .map(|t| self.jet(t).d2.abs())
            .fold(0.0, f64::max)
    }

    pub fn to_profile(self) -> Profile {
        Profile::new(move |t| self.jet(t))
    }
}
