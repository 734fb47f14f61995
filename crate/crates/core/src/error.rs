use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The parametrization is not regular: `|Xu ∧ Xv|` fell to or below the threshold.
    #[error("degenerate surface at (u, v) = ({u}, {v}): |Xu x Xv| = {norm:e}")]
    DegenerateSurface { u: f64, v: f64, norm: f64 },

    #[error("ruled surface not normalized: {condition} fails at u = {u} (deviation {deviation:e}); reparametrize the directrix/director")]
    NormalizationViolation {
        condition: &'static str,
        u: f64,
        deviation: f64,
    },

    #[error("coefficient residuals require a log-linear density (constant gradient)")]
    NonConstantGradient,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("director is vertical (b = 0): use make_vertical_plane instead")]
    UseVerticalPlane,

    #[error("invalid ODE initial data: {0}")]
    InvalidInit(String),

    #[error(
        "{which} derivative mismatch at {at}: supplied {supplied}, finite difference {numeric}"
    )]
    DerivativeMismatch {
        which: String,
        at: f64,
        supplied: f64,
        numeric: f64,
    },

    #[error("profile has a pole at u = {u}")]
    PoleAt { u: f64 },

    #[error("translation surface has no affine summand (max |g''| = {max_g2:e}, max |h''| = {max_h2:e})")]
    NotRuledForm { max_g2: f64, max_h2: f64 },

    #[error("no sign change of Hphi on bracket [{lo}, {hi}] (values {f_lo:e}, {f_hi:e})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error(
        "Hphi is not constant over the surface (spread {spread:e}); radius search is undefined"
    )]
    NonConstantCurvature { spread: f64 },

    #[error("both summands non-affine yet residual is {max_residual:e}: classification violated")]
    ClassificationViolated { max_residual: f64 },

    #[error("mesh contains a non-finite coordinate at vertex {index}")]
    NonFiniteVertex { index: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
