//! Striction curves of involute trajectory ruled surfaces.
//!
//! The central point on the ruling through `g(s)` sits at parameter
//! `u = -<g', X'> / <X', X'>`, which makes `<C', X'> = 0` for
//! `C = g + u X`. Since `g' = (c - s) k t*` and the `t*` component of `X'`
//! is `-x2 |D|`, this equals `x2 (c - s) k |D| / <X', X'>`. With a timelike
//! Darboux vector `|D|` picks up the sign of the torsion.

use crate::error::{GeometryError, Result};
use crate::lorentz::LorentzVector;
use crate::ruled::TrajectoryRuledSurface;
use crate::tolerances::{RULING_NULL, RULING_ZERO, STRICTION};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrictionPoint {
    /// Central point from the closed-form offset.
    pub point: LorentzVector,
    /// Closed-form ruling parameter of the central point.
    pub offset: f64,
    /// Central point with `g'` and `X'` from finite differences.
    pub numeric_point: LorentzVector,
    pub numeric_offset: f64,
}

pub fn striction_point(surf: &TrajectoryRuledSurface, s: f64) -> Result<StrictionPoint> {
    let k = surf.kinematics(s)?;
    let rate = k.rate();
    if rate.euclidean_norm() <= RULING_ZERO {
        return Err(GeometryError::CylindricalRuling { s });
    }
    if k.rate_sq.abs() <= RULING_NULL {
        return Err(GeometryError::SingularRuling { s });
    }
    let dir = surf.direction();
    let offset = dir.x2 * k.involute_speed * k.signed_norm / k.rate_sq;

    let g = surf.involute().point(s)?;
    let x = k.frame.combine(dir.coefficients());

    let gdot = surf.involute_velocity_numeric(s)?;
    let xdot = surf.ruling_derivative_numeric(s)?;
    let numeric_offset = -gdot.inner(xdot) / xdot.inner(xdot);

    Ok(StrictionPoint { point: g + x * offset, offset, numeric_point: g + x * numeric_offset, numeric_offset })
}

/// True when the involute itself is the striction curve on every sample.
/// Cylindrical samples carry no central point and are skipped.
pub fn base_is_striction(surf: &TrajectoryRuledSurface, samples: &[f64]) -> Result<bool> {
    for &s in samples {
        match striction_point(surf, s) {
            Ok(p) if p.offset.abs() > STRICTION => return Ok(false),
            Ok(_) | Err(GeometryError::CylindricalRuling { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
