//! Differential geometry of parametric surfaces in ℝ³ with a density.

pub mod density;
pub mod forms;
pub mod surface;
pub mod variation;

pub use density::{DensityField, DensityKind};
pub use forms::{
    fundamental_forms, minimality_report, weighted_mean_curvature, Curvature, FirstForm,
    FundamentalForms, GridRecord, MinimalityReport, SecondForm, DEGENERACY_THRESHOLD,
};
pub use surface::{
    default_fd_steps, fd_derivatives, fd_derivatives_split, Domain, ParametricSurface, SurfaceJet,
};
pub use variation::{first_variation_check, weighted_area, FirstVariation};
