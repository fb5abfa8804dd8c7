//! Darboux-angle profiles that make a given ruling developable.
//!
//! For a spacelike Darboux vector the drall numerator vanishes exactly when
//! `theta' = x1 x3 |D| / (x3^2 - x2^2)`, so
//! `theta(s) = x1 x3 / (x3^2 - x2^2) * integral(|D|) + lambda`.
//! On the rectifying plane (`x2 = 0`) the coefficient reduces to `x1 / x3`.
//!
//! Given `|D|(s)`, the profile fixes the curvatures through
//! `k = |D| cosh(theta)`, `tau = |D| sinh(theta) = k tanh(theta)`.

use std::sync::Arc;

use crate::curve::ScalarFn;
use crate::error::{GeometryError, Result};
use crate::ruled::RulingDirection;
use crate::tolerances::NULL_REL;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    General,
    Rectifying,
}

#[derive(Clone)]
pub struct ThetaProfile {
    coeff: f64,
    lambda: f64,
    s0: f64,
    dnorm: ScalarFn,
}

impl std::fmt::Debug for ThetaProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ThetaProfile")
            .field("coeff", &self.coeff)
            .field("lambda", &self.lambda)
            .field("s0", &self.s0)
            .finish()
    }
}

/// Composite Simpson rule with an even number of panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = (panels.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Panels per unit length used for the running integral of `|D|`.
const PANELS_PER_UNIT: f64 = 100.0;

pub fn theta_profile(
    kind: ProfileKind,
    dir: &RulingDirection,
    dnorm: ScalarFn,
    s0: f64,
    lambda: f64,
) -> Result<ThetaProfile> {
    let [x1, x2, x3] = dir.coefficients();
    let coeff = match kind {
        ProfileKind::General => {
            let den = x3 * x3 - x2 * x2;
            if den.abs() <= NULL_REL {
                return Err(GeometryError::DegenerateCoefficient);
            }
            x1 * x3 / den
        }
        ProfileKind::Rectifying => {
            if x2 != 0.0 || x3.abs() <= NULL_REL {
                return Err(GeometryError::DegenerateCoefficient);
            }
            x1 / x3
        }
    };
    Ok(ThetaProfile { coeff, lambda, s0, dnorm })
}

impl ThetaProfile {
    pub fn coefficient(&self) -> f64 {
        self.coeff
    }

    pub fn theta(&self, s: f64) -> f64 {
        if self.coeff == 0.0 || s == self.s0 {
            return self.lambda;
        }
        let panels = ((s - self.s0).abs() * PANELS_PER_UNIT).ceil() as usize;
        let d = &self.dnorm;
        self.coeff * simpson(|u| d(u), self.s0, s, panels) + self.lambda
    }

    /// Curvature and torsion realizing this profile with Darboux norm `|D|`.
    pub fn curvatures(&self) -> (ScalarFn, ScalarFn) {
        let (a, b) = (self.clone(), self.clone());
        (Arc::new(move |s| (a.dnorm)(s) * a.theta(s).cosh()), Arc::new(move |s| (b.dnorm)(s) * b.theta(s).sinh()))
    }
}
