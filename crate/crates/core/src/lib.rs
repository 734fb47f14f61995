//! Weighted mean curvature and minimal surfaces in ℝ³ with density `e^φ`.
//!
//! The crate evaluates `Hphi = H − ½⟨∇φ, N⟩` on parametric surfaces, builds the
//! ruled and translation minimal surfaces of the log-linear density `e^z`, and
//! checks minimality by residual grids, ODE integration and a weighted-area
//! first-variation oracle.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod mesh_io;
pub mod profile;
pub mod ruled;
pub mod translation;

pub use error::{Error, Result};

pub type Vec3 = nalgebra::Vector3<f64>;
