//! Trajectory ruled surfaces `phi(s, v) = g(s) + v X(s)` over an involute `g`,
//! with the ruling `X = x1 t* + x2 n* + x3 b*` fixed in the involute frame.
//!
//! # Distribution parameter
//!
//! With `w = (c - s) k`, `|D|` and `theta'` of the base curve, differentiating
//! the involute frame gives, for a spacelike Darboux vector,
//!
//! ```text
//! X' = -x2 |D| t* + (x3 theta' - x1 |D|) n* + x2 theta' b*
//! det(g', X, X') = w [x1 x3 |D| - theta' (x3^2 - x2^2)]
//! <X', X'>      = (x2^2 - x1^2)|D|^2 + (x2^2 - x3^2) theta'^2 + 2 x1 x3 theta' |D|
//! ```
//!
//! and for a timelike Darboux vector, with `e = sign(tau)` and `E = e |D|`,
//!
//! ```text
//! X' = -x2 E t* + (x1 E - x3 theta') n* - x2 theta' b*
//! det(g', X, X') = -w [x1 x3 E - theta' (x3^2 - x2^2)]
//! <X', X'>      = (x1^2 + x2^2)|D|^2 + (x3^2 - x2^2) theta'^2 - 2 x1 x3 theta' E
//! ```
//!
//! The drall is `det(g', X, X') / |<X', X'>|`. The same quantity is also
//! computed directly from finite differences of `g` and `X`
//! ([`TrajectoryRuledSurface::drall_numeric`]), which serves as an oracle for
//! the closed form.

use crate::curve::DerivativeMode;
use crate::error::{GeometryError, Result};
use crate::frenet::{self, DarbouxCase, DarbouxData};
use crate::involute::{InvoluteCurve, InvoluteFrame};
use crate::lorentz::{triple, LorentzVector};
use crate::tolerances::{DEV_ANALYTIC, DEV_FD, HELIX, H_FD_LOW, NULL_REL, RULING_NULL, RULING_ZERO};

/// Causal character of a ruling direction under the `(+, -, +)` signature of the
/// involute frame with spacelike Darboux vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RulingCausality {
    Spacelike,
    Timelike,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RulingDirection {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub causal: RulingCausality,
}

impl RulingDirection {
    /// Normalize `(x1, x2, x3)` so that `|x1^2 - x2^2 + x3^2| = 1`.
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if !(x1.is_finite() && x2.is_finite() && x3.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let q = x1 * x1 - x2 * x2 + x3 * x3;
        let e = x1 * x1 + x2 * x2 + x3 * x3;
        if q.abs() <= NULL_REL * e.max(1.0) {
            return Err(GeometryError::NullDirection);
        }
        let k = 1.0 / q.abs().sqrt();
        let causal = if q < 0.0 { RulingCausality::Timelike } else { RulingCausality::Spacelike };
        Ok(Self { x1: x1 * k, x2: x2 * k, x3: x3 * k, causal })
    }

    pub const fn t_star() -> Self {
        Self { x1: 1.0, x2: 0.0, x3: 0.0, causal: RulingCausality::Spacelike }
    }

    pub const fn n_star() -> Self {
        Self { x1: 0.0, x2: 1.0, x3: 0.0, causal: RulingCausality::Timelike }
    }

    pub const fn b_star() -> Self {
        Self { x1: 0.0, x2: 0.0, x3: 1.0, causal: RulingCausality::Spacelike }
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// `"t*"`, `"n*"`, `"b*"` for the frame axes, `"general"` otherwise.
    pub fn label(&self) -> &'static str {
        match self.coefficients() {
            [a, b, c] if b == 0.0 && c == 0.0 && a == 1.0 => "t*",
            [a, b, c] if a == 0.0 && c == 0.0 && b == 1.0 => "n*",
            [a, b, c] if a == 0.0 && b == 0.0 && c == 1.0 => "b*",
            _ => "general",
        }
    }

    pub fn in_rectifying_plane(&self) -> bool {
        self.x2 == 0.0
    }
}

pub fn make_direction(x1: f64, x2: f64, x3: f64) -> Result<RulingDirection> {
    RulingDirection::new(x1, x2, x3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    Regular,
    /// The ruling direction is stationary (`X' = 0`).
    Cylindrical,
    /// `<X', X'>` vanishes while `X'` does not.
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrallResult {
    /// Signed drall; 0 when cylindrical, infinite or NaN when singular.
    pub value: f64,
    pub degeneracy: Degeneracy,
    pub developable: bool,
    /// `det(g', X, X')`.
    pub numerator: f64,
    /// `<X', X'>` (signed).
    pub ruling_rate_sq: f64,
}

impl DrallResult {
    fn classify(numerator: f64, ruling_rate_sq: f64, ruling_rate_len: f64, zero_tol: f64, dev_tol: f64) -> Self {
        if ruling_rate_len <= zero_tol {
            return Self {
                value: 0.0,
                degeneracy: Degeneracy::Cylindrical,
                developable: true,
                numerator,
                ruling_rate_sq,
            };
        }
        if ruling_rate_sq.abs() <= RULING_NULL {
            let value = if numerator.abs() <= RULING_NULL { f64::NAN } else { numerator.signum() * f64::INFINITY };
            return Self { value, degeneracy: Degeneracy::Singular, developable: false, numerator, ruling_rate_sq };
        }
        let value = numerator / ruling_rate_sq.abs();
        Self { value, degeneracy: Degeneracy::Regular, developable: value.abs() <= dev_tol, numerator, ruling_rate_sq }
    }
}

/// First-order data of the ruling at one parameter, from the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RulingKinematics {
    pub darboux: DarbouxData,
    pub frame: InvoluteFrame,
    /// `(c - s) k`, the signed speed of the involute.
    pub involute_speed: f64,
    /// `|D|`, times `sign(tau)` when the Darboux vector is timelike.
    pub signed_norm: f64,
    /// Coefficients of `X'` in the involute frame.
    pub rate_coefficients: [f64; 3],
    /// `det(g', X, X')`.
    pub numerator: f64,
    /// `<X', X'>`.
    pub rate_sq: f64,
}

impl RulingKinematics {
    pub fn rate(&self) -> LorentzVector {
        self.frame.combine(self.rate_coefficients)
    }
}

#[derive(Debug, Clone)]
pub struct TrajectoryRuledSurface {
    inv: InvoluteCurve,
    dir: RulingDirection,
}

impl TrajectoryRuledSurface {
    pub fn new(inv: InvoluteCurve, dir: RulingDirection) -> Self {
        Self { inv, dir }
    }

    pub fn involute(&self) -> &InvoluteCurve {
        &self.inv
    }

    pub fn direction(&self) -> &RulingDirection {
        &self.dir
    }

    fn analytic(&self) -> bool {
        self.inv.base().mode() == DerivativeMode::Analytic
    }

    /// `g(s) + v X(s)`.
    pub fn point(&self, s: f64, v: f64) -> Result<LorentzVector> {
        Ok(self.inv.point(s)? + self.ruling(s)? * v)
    }

    /// The ruling direction `X(s)` in ambient coordinates.
    pub fn ruling(&self, s: f64) -> Result<LorentzVector> {
        Ok(self.inv.frame(s)?.combine(self.dir.coefficients()))
    }

    pub fn kinematics(&self, s: f64) -> Result<RulingKinematics> {
        self.inv.check_domain(s)?;
        let darboux = frenet::darboux_unchecked(self.inv.base(), s)?;
        let frame = InvoluteFrame::from_darboux(&darboux);
        let [x1, x2, x3] = self.dir.coefficients();
        let dn = match darboux.case {
            DarbouxCase::Spacelike => darboux.d_norm,
            DarbouxCase::Timelike => darboux.d_norm.copysign(darboux.frame.tau),
        };
        let th = darboux.theta_dot;
        let w = (self.inv.c() - s) * darboux.frame.kappa;
        let bracket = x1 * x3 * dn - th * (x3 * x3 - x2 * x2);
        let (rate_coefficients, numerator, rate_sq) = match darboux.case {
            DarbouxCase::Spacelike => (
                [-x2 * dn, x3 * th - x1 * dn, x2 * th],
                w * bracket,
                (x2 * x2 - x1 * x1) * dn * dn + (x2 * x2 - x3 * x3) * th * th + 2.0 * x1 * x3 * th * dn,
            ),
            DarbouxCase::Timelike => (
                [-x2 * dn, x1 * dn - x3 * th, -x2 * th],
                -w * bracket,
                (x1 * x1 + x2 * x2) * dn * dn + (x3 * x3 - x2 * x2) * th * th - 2.0 * x1 * x3 * th * dn,
            ),
        };
        Ok(RulingKinematics {
            darboux,
            frame,
            involute_speed: w,
            signed_norm: dn,
            rate_coefficients,
            numerator,
            rate_sq,
        })
    }

    /// `dX/ds` from the closed form.
    ///
    /// In the base frame, for a spacelike Darboux vector this reads
    /// `(x1 k - theta' x2 sinh - theta' x3 cosh) t - x2 |D| n + (-x1 tau + theta' x2 cosh + theta' x3 sinh) b`.
    pub fn ruling_derivative(&self, s: f64) -> Result<LorentzVector> {
        Ok(self.kinematics(s)?.rate())
    }

    /// Drall from the closed form.
    pub fn drall_closed(&self, s: f64) -> Result<DrallResult> {
        let k = self.kinematics(s)?;
        let dev = if self.analytic() { DEV_ANALYTIC } else { DEV_FD };
        Ok(DrallResult::classify(k.numerator, k.rate_sq, k.rate().euclidean_norm(), RULING_ZERO, dev))
    }

    /// `X(s)` without the domain check.
    fn ruling_unchecked(&self, s: f64) -> Result<LorentzVector> {
        Ok(self.inv.frame_unchecked(s)?.combine(self.dir.coefficients()))
    }

    fn fd_step(&self) -> f64 {
        frenet::theta_step(self.inv.base()).max(H_FD_LOW)
    }

    /// Finite-difference `dX/ds`.
    pub fn ruling_derivative_numeric(&self, s: f64) -> Result<LorentzVector> {
        self.inv.check_domain(s)?;
        let h = self.fd_step();
        let (p1, m1, p2, m2) = (
            self.ruling_unchecked(s + h)?,
            self.ruling_unchecked(s - h)?,
            self.ruling_unchecked(s + 2.0 * h)?,
            self.ruling_unchecked(s - 2.0 * h)?,
        );
        Ok(((p1 - m1) * 8.0 - (p2 - m2)) * (1.0 / (12.0 * h)))
    }

    /// Finite-difference involute velocity.
    pub fn involute_velocity_numeric(&self, s: f64) -> Result<LorentzVector> {
        self.inv.check_domain(s)?;
        let h = H_FD_LOW;
        let (p1, m1, p2, m2) = (
            self.inv.point_unchecked(s + h)?,
            self.inv.point_unchecked(s - h)?,
            self.inv.point_unchecked(s + 2.0 * h)?,
            self.inv.point_unchecked(s - 2.0 * h)?,
        );
        Ok(((p1 - m1) * 8.0 - (p2 - m2)) * (1.0 / (12.0 * h)))
    }

    /// Drall as `det(g', X, X') / |<X', X'>|` with `g'` and `X'` both taken by
    /// finite differences of the sampled involute and ruling.
    pub fn drall_numeric(&self, s: f64) -> Result<DrallResult> {
        let gdot = self.involute_velocity_numeric(s)?;
        let x = self.ruling(s)?;
        let xdot = self.ruling_derivative_numeric(s)?;
        let zero_tol = if self.analytic() { RULING_ZERO } else { 1e-5 };
        Ok(DrallResult::classify(triple(gdot, x, xdot), xdot.inner(xdot), xdot.euclidean_norm(), zero_tol, DEV_FD))
    }

    /// Euclidean normal `phi_s x phi_v` at `(s, v)` from the closed-form kinematics.
    pub fn normal(&self, s: f64, v: f64) -> Result<LorentzVector> {
        let k = self.kinematics(s)?;
        let gdot = k.frame.t_star * k.involute_speed;
        let phi_s = gdot + k.rate() * v;
        let phi_v = k.frame.combine(self.dir.coefficients());
        Ok(phi_s.euclidean_cross(phi_v))
    }
}

/// Why a surface was found developable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DevelopabilityReason {
    /// Ruling along the involute tangent; the drall vanishes identically.
    TangentRuling,
    /// The ruling never moves.
    CylindricalRuling,
    /// `theta' = 0` on every sample: the base curve is a general helix.
    HelixBase,
    /// `theta'` follows `x1 x3 |D| / (x3^2 - x2^2)`, killing the numerator.
    AngleProfile,
}

impl DevelopabilityReason {
    pub fn describe(self) -> &'static str {
        match self {
            DevelopabilityReason::TangentRuling => "ruling along the involute tangent",
            DevelopabilityReason::CylindricalRuling => "cylindrical ruling",
            DevelopabilityReason::HelixBase => "base curve is a general helix",
            DevelopabilityReason::AngleProfile => "Darboux angle satisfies the developability profile",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DevelopabilityReport {
    pub developable: bool,
    pub reason: Option<DevelopabilityReason>,
    /// Largest `|drall|` over regular samples.
    pub max_abs_drall: f64,
    pub regular: usize,
    pub cylindrical: usize,
    pub singular: usize,
    pub max_abs_theta_dot: f64,
    /// Largest angle between the normals at `v = 0.1` and `v = 1.0` over
    /// developable samples where both normals are non-zero.
    pub max_normal_angle: f64,
    pub normal_checks: usize,
}

/// Angle allowed between normals along a ruling of a developable surface.
pub const NORMAL_ANGLE: f64 = 1e-3;

fn angle_between(a: LorentzVector, b: LorentzVector) -> f64 {
    let c = a.euclidean_cross(b).euclidean_norm();
    let d = (a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2).abs();
    c.atan2(d)
}

/// Sample the closed-form drall and decide developability on `samples`.
pub fn classify_developability(surf: &TrajectoryRuledSurface, samples: &[f64]) -> Result<DevelopabilityReport> {
    let mut rep = DevelopabilityReport {
        developable: true,
        reason: None,
        max_abs_drall: 0.0,
        regular: 0,
        cylindrical: 0,
        singular: 0,
        max_abs_theta_dot: 0.0,
        max_normal_angle: 0.0,
        normal_checks: 0,
    };
    for &s in samples {
        let k = surf.kinematics(s)?;
        rep.max_abs_theta_dot = rep.max_abs_theta_dot.max(k.darboux.theta_dot.abs());
        let d = surf.drall_closed(s)?;
        match d.degeneracy {
            Degeneracy::Regular => {
                rep.regular += 1;
                rep.max_abs_drall = rep.max_abs_drall.max(d.value.abs());
            }
            Degeneracy::Cylindrical => rep.cylindrical += 1,
            Degeneracy::Singular => rep.singular += 1,
        }
        rep.developable &= d.developable;
        if d.developable {
            let (n1, n2) = (surf.normal(s, 0.1)?, surf.normal(s, 1.0)?);
            if n1.euclidean_norm() > 1e-9 && n2.euclidean_norm() > 1e-9 {
                rep.normal_checks += 1;
                rep.max_normal_angle = rep.max_normal_angle.max(angle_between(n1, n2));
            }
        }
    }
    if rep.developable {
        let dir = surf.direction();
        rep.reason = Some(if dir.x2 == 0.0 && dir.x3 == 0.0 {
            DevelopabilityReason::TangentRuling
        } else if rep.cylindrical == samples.len() {
            DevelopabilityReason::CylindricalRuling
        } else if rep.max_abs_theta_dot <= HELIX {
            DevelopabilityReason::HelixBase
        } else {
            DevelopabilityReason::AngleProfile
        });
    }
    Ok(rep)
}

/// `|drall(n*) / drall(b*)| = theta'^2 / |<X'_n*, X'_n*>|`, i.e.
/// `theta'^2 / ||D|^2 + theta'^2|` for a spacelike Darboux vector and
/// `theta'^2 / ||D|^2 - theta'^2|` for a timelike one. Independent of `c`.
pub fn normal_binormal_ratio(d: &DarbouxData) -> f64 {
    let (dn, th) = (d.d_norm, d.theta_dot);
    let den = match d.case {
        DarbouxCase::Spacelike => dn * dn + th * th,
        DarbouxCase::Timelike => dn * dn - th * th,
    };
    th * th / den.abs()
}
