use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("lightlike (null) vector where a causal direction is required")]
    NullInput,
    #[error("the two spacelike vectors span a degenerate (lightlike) plane")]
    DegeneratePlane,
    #[error("timelike vectors have opposite time orientation")]
    OrientationMismatch,
    #[error("non-finite component in input")]
    NonFinite,

    #[error("parameter {s} outside domain [{lo}, {hi}]")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },
    #[error("invalid parameter domain [{lo}, {hi}]")]
    InvalidDomain { lo: f64, hi: f64 },
    #[error("no analytic derivative of order {order} supplied")]
    MissingAnalyticDerivative { order: usize },
    #[error("curve is not unit-speed timelike at s = {s} (<r', r'> = {speed_sq})")]
    NotUnitSpeed { s: f64, speed_sq: f64 },
    #[error("curvature {kappa} below minimum at s = {s}")]
    DegenerateFrame { s: f64, kappa: f64 },
    #[error("Darboux vector is lightlike at s = {s} (|kappa| = |tau|)")]
    NullDarboux { s: f64 },

    #[error("invalid initial frame: {0}")]
    InvalidInitialFrame(String),
    #[error("prescribed curvature {kappa} below minimum at s = {s}")]
    InvalidCurvature { s: f64, kappa: f64 },
    #[error("Frenet integration failed: {0}")]
    IntegrationFailure(String),

    #[error("ruling direction is lightlike")]
    NullDirection,
    #[error("involute domain [{lo}, {hi}] reaches the cusp at s = c = {c}")]
    CuspInDomain { lo: f64, hi: f64, c: f64 },
    #[error("angle-profile coefficient is undefined for this direction")]
    DegenerateCoefficient,
    #[error("ruling is cylindrical at s = {s}; striction point undefined")]
    CylindricalRuling { s: f64 },
    #[error("ruling derivative is lightlike at s = {s}; striction point undefined")]
    SingularRuling { s: f64 },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
