//! Numerical thresholds shared across the crate.
//!
//! Two regimes exist throughout: quantities computed from analytic derivatives
//! (tight thresholds) and quantities computed through finite-difference stencils
//! (loose thresholds). Call sites pick the pair member matching their path.

/// Relative width of the light cone used by causal classification.
/// The absolute threshold is `NULL_REL * max(1, |u|^2_euclidean)`.
pub const NULL_REL: f64 = 1e-9;

/// Allowed deviation of `<r', r'>` from -1 for a unit-speed timelike curve.
pub const SPEED: f64 = 1e-6;

/// Frame orthonormality / Frenet residual threshold, analytic derivatives.
pub const FRAME_ANALYTIC: f64 = 1e-8;
/// Frame orthonormality / Frenet residual threshold, finite differences.
pub const FRAME_FD: f64 = 1e-4;

/// Smallest curvature accepted when building a Frenet frame.
pub const KAPPA_MIN: f64 = 1e-8;

/// Maximum spread of tau/kappa for a general helix verdict.
pub const HELIX: f64 = 1e-6;

/// Finite-difference step for first and second derivatives.
pub const H_FD_LOW: f64 = 1e-4;
/// Finite-difference step for third derivatives.
pub const H_FD_HIGH: f64 = 1e-3;

/// Excluded half-width around the involute cusp s = c.
pub const EPS_CUSP: f64 = 1e-3;

/// Developability threshold on |drall|, closed-form path.
pub const DEV_ANALYTIC: f64 = 1e-6;
/// Developability threshold on |drall|, finite-difference path.
pub const DEV_FD: f64 = 1e-4;

/// Central-point orthogonality and striction-offset threshold.
pub const STRICTION: f64 = 1e-4;

/// Euclidean magnitude below which a ruling derivative counts as zero.
pub const RULING_ZERO: f64 = 1e-8;

/// Magnitude below which `<X', X'>` counts as lightlike.
pub const RULING_NULL: f64 = 1e-9;
