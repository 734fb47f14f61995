//! Ruled surfaces `X(u, v) = α(u) + vβ(u)` and their classification under `e^z`.

pub mod family;
pub mod ode;
pub mod residuals;
pub mod surface;

pub use family::{
    closed_form_directrix, make_cylindrical_minimal, make_vertical_plane, CylindricalFamilyParams,
};
pub use ode::{
    integrate_directrix, integrate_from_closed_form, ClosedFormDeviation, OdeSample, OdeSolution,
};
pub use residuals::{
    coefficient_residuals, helicoid_ruled, is_vertical_plane, max_residuals,
    noncylindrical_catalog, noncylindrical_counterexample_suite, random_noncylindrical,
    ruled_falsification_search, spherical_ruled, FalsificationReport, Residuals, SuiteEntry,
    SuiteReport,
};
pub use surface::{build_ruled, Curve, CurveJet, RuledSurface};
