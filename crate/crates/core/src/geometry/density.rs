//! Densities `e^φ` on ℝ³, stored through `φ` and `∇φ`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::Vec3;

type ScalarField = Arc<dyn Fn(&Vec3) -> f64 + Send + Sync>;
type VectorField = Arc<dyn Fn(&Vec3) -> Vec3 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityKind {
    /// `φ(x) = ⟨a, x⟩`, constant gradient `a`.
    Linear(Vec3),
    /// `φ(x) = -|x|²/2` (the normalizing constant is dropped, only `∇φ` enters `Hphi`).
    Gaussian,
    Custom,
}

#[derive(Clone)]
pub struct DensityField {
    kind: DensityKind,
    phi: ScalarField,
    grad_phi: VectorField,
}

impl fmt::Debug for DensityField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DensityField")
            .field("kind", &self.kind)
            .finish()
    }
}

impl DensityField {
    /// The canonical log-linear density `e^z`.
    pub fn ez() -> Self {
        Self::linear_unchecked(Vec3::z())
    }

    /// Euclidean space, `φ ≡ 0`.
    pub fn flat() -> Self {
        Self::linear_unchecked(Vec3::zeros())
    }

    pub fn linear(a: Vec3) -> Result<Self> {
        if !a.iter().all(|c| c.is_finite()) || a.norm() == 0.0 {
            return Err(Error::InvalidParams(
                "linear density needs a finite nonzero vector".into(),
            ));
        }
        Ok(Self::linear_unchecked(a))
    }

    fn linear_unchecked(a: Vec3) -> Self {
        Self {
            kind: DensityKind::Linear(a),
            phi: Arc::new(move |x| a.dot(x)),
            grad_phi: Arc::new(move |_| a),
        }
    }

    pub fn gaussian() -> Self {
        Self {
            kind: DensityKind::Gaussian,
            phi: Arc::new(|x| -0.5 * x.norm_squared()),
            grad_phi: Arc::new(|x| -x),
        }
    }

    pub fn custom<P, G>(phi: P, grad_phi: G) -> Self
    where
        P: Fn(&Vec3) -> f64 + Send + Sync + 'static,
        G: Fn(&Vec3) -> Vec3 + Send + Sync + 'static,
    {
        Self {
            kind: DensityKind::Custom,
            phi: Arc::new(phi),
            grad_phi: Arc::new(grad_phi),
        }
    }

    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    pub fn phi(&self, x: &Vec3) -> f64 {
        (self.phi)(x)
    }

    pub fn grad_phi(&self, x: &Vec3) -> Vec3 {
        (self.grad_phi)(x)
    }

    /// The weight `e^φ(x)`.
    pub fn weight(&self, x: &Vec3) -> f64 {
        self.phi(x).exp()
    }

    /// Gradient when it is constant (log-linear densities only).
    pub fn constant_gradient(&self) -> Option<Vec3> {
        match self.kind {
            DensityKind::Linear(a) => Some(a),
            _ => None,
        }
    }

    /// Largest relative deviation between `grad_phi` and central differences of `phi`
    /// over the given points.
    pub fn gradient_mismatch(&self, points: &[Vec3]) -> f64 {
        let mut worst = 0.0_f64;
        for x in points {
            let step = 1e-5 * x.amax().max(1.0);
            let analytic = self.grad_phi(x);
            for axis in 0..3 {
                let mut e = Vec3::zeros();
                e[axis] = step;
                let numeric = (self.phi(&(x + e)) - self.phi(&(x - e))) / (2.0 * step);
                let scale = analytic.norm().max(1.0);
                worst = worst.max((numeric - analytic[axis]).abs() / scale);
            }
        }
        worst
    }
}
