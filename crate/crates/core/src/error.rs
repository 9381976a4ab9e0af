use thiserror::Error;

/// Errors raised by the geometry routines.
///
/// Every variant carries a stable machine-readable [`code`](GeometryError::code)
/// which the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("vector has zero or non-finite length")]
    ZeroVector,
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("no sign change across bracket ({lo}, {hi})")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("matrix does not define a real quadric cone")]
    NotACone,
    #[error("cone matrix is zero")]
    ZeroMatrix,
    #[error("parameters must be pairwise distinct, got ({0}, {1}, {2})")]
    DegenerateParameters(f64, f64, f64),
    #[error("confocal parameter {0} coincides with a critical value")]
    CriticalParameter(f64),
    #[error("point lies on (or too close to) a principal plane")]
    NonGenericPoint,
    #[error("confocal coordinates are not interlaced: {0}")]
    NegativeSquare(String),
    #[error("point is not on the surface (residual {0:e})")]
    NotOnSurface(f64),
    #[error("the imaginary focal curve has no real points")]
    ImaginaryCurve,
    #[error("apex lies on the surface (residual {0:e})")]
    ApexOnSurface(f64),
    #[error("confocal parameter {0} equals a confocal coordinate of the apex")]
    ApexOnConfocalSurface(f64),
    #[error("constraint system has rank {0} < 5")]
    RankDeficient(usize),
    #[error("at least {needed} inputs required, got {got}")]
    TooFewInputs { needed: usize, got: usize },
    #[error("sample point coincides with the apex")]
    DegenerateRay,
    #[error("invalid conic: {0}")]
    InvalidConic(&'static str),
    #[error("aperture {0} outside [0, pi/2]")]
    InvalidAperture(f64),
}

impl GeometryError {
    /// Snake-case identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        use GeometryError::*;
        match self {
            ZeroVector => "zero_vector",
            NonFinite(_) => "non_finite",
            NoSignChange { .. } => "no_sign_change",
            NotACone => "not_a_cone",
            ZeroMatrix => "zero_matrix",
            DegenerateParameters(..) => "degenerate_parameters",
            CriticalParameter(_) => "critical_parameter",
            NonGenericPoint => "non_generic_point",
            NegativeSquare(_) => "negative_square",
            NotOnSurface(_) => "not_on_surface",
            ImaginaryCurve => "imaginary_curve",
            ApexOnSurface(_) => "apex_on_surface",
            ApexOnConfocalSurface(_) => "apex_on_confocal_surface",
            RankDeficient(_) => "rank_deficient",
            TooFewInputs { .. } => "too_few_inputs",
            DegenerateRay => "degenerate_ray",
            InvalidConic(_) => "invalid_conic",
            InvalidAperture(_) => "invalid_aperture",
        }
    }
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
