//! Frenet apparatus and Darboux data of unit-speed timelike curves.
//!
//! Frenet equations for a timelike curve with timelike tangent `t` and
//! spacelike normal `n`, binormal `b`:
//!
//! ```text
//! t' = k n,   n' = k t - tau b,   b' = tau n
//! ```
//!
//! The Darboux vector `D = tau t - k b` is spacelike when `|k| > |tau|` and
//! timelike when `|k| < |tau|`. In both cases a rapidity `theta` relates the
//! curvatures to `|D|`.

use crate::curve::{DerivativeMode, ParamCurve};
use crate::error::{GeometryError, Result};
use crate::lorentz::{triple, CausalClass, LorentzVector, Orientation};
use crate::tolerances::{HELIX, H_FD_LOW, KAPPA_MIN, NULL_REL, SPEED};

/// Orthonormal moving trihedron, without curvature data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trihedron {
    pub t: LorentzVector,
    pub n: LorentzVector,
    pub b: LorentzVector,
}

impl Trihedron {
    /// `t = e0`, `n = e1`, `b = e2`.
    pub const fn canonical() -> Self {
        Self {
            t: LorentzVector::new(1.0, 0.0, 0.0),
            n: LorentzVector::new(0.0, 1.0, 0.0),
            b: LorentzVector::new(0.0, 0.0, 1.0),
        }
    }

    /// Largest deviation from `<t,t> = -1, <n,n> = <b,b> = 1` and mutual orthogonality.
    pub fn orthonormality_residual(&self) -> f64 {
        let Self { t, n, b } = *self;
        [
            (t.inner(t) + 1.0).abs(),
            (n.inner(n) - 1.0).abs(),
            (b.inner(b) - 1.0).abs(),
            t.inner(n).abs(),
            n.inner(b).abs(),
            b.inner(t).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// Coordinate determinant of the rows `t, n, b`; +1 for a positively oriented frame.
    pub fn orientation(&self) -> f64 {
        triple(self.t, self.n, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetApparatus {
    pub t: LorentzVector,
    pub n: LorentzVector,
    pub b: LorentzVector,
    pub kappa: f64,
    pub tau: f64,
}

impl FrenetApparatus {
    pub fn trihedron(&self) -> Trihedron {
        Trihedron { t: self.t, n: self.n, b: self.b }
    }
}

/// Frenet apparatus at `s`.
///
/// `t = r'`, `k = |r''|`, `n = r''/k`. The binormal is the unit spacelike
/// vector Lorentz-orthogonal to `t` and `n` with `det(t, n, b) = +1`.
/// Flipping `b` would flip the sign of the torsion without disturbing the
/// Frenet equations, so the determinant fixes the convention.
/// Torsion comes from `<n', b> = -tau`, i.e. `tau = -<r''', b> / k`.
pub fn frenet_apparatus(curve: &ParamCurve, s: f64) -> Result<FrenetApparatus> {
    curve.check_domain(s)?;
    apparatus_unchecked(curve, s)
}

pub(crate) fn apparatus_unchecked(curve: &ParamCurve, s: f64) -> Result<FrenetApparatus> {
    let d = curve.derivatives_unchecked(s, 3)?;
    let (t, acc, jerk) = (d[0], d[1], d[2]);
    let speed_sq = t.inner(t);
    if !speed_sq.is_finite() || (speed_sq + 1.0).abs() > SPEED {
        return Err(GeometryError::NotUnitSpeed { s, speed_sq });
    }
    let kappa = acc.norm();
    if !(kappa >= KAPPA_MIN) {
        return Err(GeometryError::DegenerateFrame { s, kappa });
    }
    let n = acc * (1.0 / kappa);
    let mut b = t.cross(n);
    b = b * (1.0 / b.norm());
    if triple(t, n, b) < 0.0 {
        b = -b;
    }
    let tau = -jerk.inner(b) / kappa;
    Ok(FrenetApparatus { t, n, b, kappa, tau })
}

/// Causal character of the Darboux vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DarbouxCase {
    /// `|k| > |tau|`: `k = |D| cosh(theta)`, `tau = |D| sinh(theta)`.
    Spacelike,
    /// `|k| < |tau|`: `k = e |D| sinh(theta)`, `tau = e |D| cosh(theta)` with `e = sign(tau)`.
    Timelike,
}

impl DarbouxCase {
    pub fn causal_class(self, d: LorentzVector) -> CausalClass {
        match self {
            DarbouxCase::Spacelike => CausalClass::Spacelike,
            DarbouxCase::Timelike if d.x0 > 0.0 => CausalClass::Timelike(Orientation::Positive),
            DarbouxCase::Timelike => CausalClass::Timelike(Orientation::Negative),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarbouxData {
    pub frame: FrenetApparatus,
    /// `D = tau t - k b`.
    pub d: LorentzVector,
    pub case: DarbouxCase,
    pub d_norm: f64,
    /// Lorentzian timelike angle between `t` and `c`.
    pub theta: f64,
    /// Derivative of `theta` with respect to arc length.
    pub theta_dot: f64,
    /// `D / |D|`.
    pub c_unit: LorentzVector,
}

fn case_and_theta(kappa: f64, tau: f64, s: f64) -> Result<(DarbouxCase, f64)> {
    let gap = kappa.abs() - tau.abs();
    if gap.abs() <= NULL_REL * kappa.abs().max(1.0) {
        return Err(GeometryError::NullDarboux { s });
    }
    if gap > 0.0 {
        Ok((DarbouxCase::Spacelike, (tau / kappa).atanh()))
    } else {
        Ok((DarbouxCase::Timelike, (kappa / tau).atanh()))
    }
}

/// `theta(s)` without domain checking, forced into the given case.
pub(crate) fn theta_unchecked(curve: &ParamCurve, s: f64, case: DarbouxCase) -> Result<f64> {
    let f = apparatus_unchecked(curve, s)?;
    Ok(match case {
        DarbouxCase::Spacelike => (f.tau / f.kappa).atanh(),
        DarbouxCase::Timelike => (f.kappa / f.tau).atanh(),
    })
}

/// Step used for differencing `theta`. Finite-difference curves carry a noisier
/// `theta` (it needs r'''), so they get a wider step.
pub(crate) fn theta_step(curve: &ParamCurve) -> f64 {
    match curve.mode() {
        DerivativeMode::Analytic => H_FD_LOW,
        DerivativeMode::FiniteDifference => 1e-2,
    }
}

pub fn darboux_data(curve: &ParamCurve, s: f64) -> Result<DarbouxData> {
    curve.check_domain(s)?;
    darboux_unchecked(curve, s)
}

pub(crate) fn darboux_unchecked(curve: &ParamCurve, s: f64) -> Result<DarbouxData> {
    let frame = apparatus_unchecked(curve, s)?;
    let (case, theta) = case_and_theta(frame.kappa, frame.tau, s)?;
    let d = frame.t * frame.tau - frame.b * frame.kappa;
    let d_norm = (frame.kappa * frame.kappa - frame.tau * frame.tau).abs().sqrt();
    let c_unit = d * (1.0 / d_norm);

    // theta' by a five-point central difference of theta
    let h = theta_step(curve);
    let th = |x: f64| theta_unchecked(curve, x, case);
    let (p1, m1, p2, m2) = (th(s + h)?, th(s - h)?, th(s + 2.0 * h)?, th(s - 2.0 * h)?);
    let theta_dot = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h);
    Ok(DarbouxData { frame, d, case, d_norm, theta, theta_dot, c_unit })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelixVerdict {
    pub is_helix: bool,
    /// Largest `|tau/k - median(tau/k)|` over the samples.
    pub deviation: f64,
    pub median_ratio: f64,
}

/// A curve is a general helix when `tau/k` is constant.
pub fn is_general_helix(curve: &ParamCurve, samples: &[f64]) -> Result<HelixVerdict> {
    let mut ratios =
        samples.iter().map(|&s| frenet_apparatus(curve, s).map(|f| f.tau / f.kappa)).collect::<Result<Vec<_>>>()?;
    if ratios.is_empty() {
        return Ok(HelixVerdict { is_helix: true, deviation: 0.0, median_ratio: 0.0 });
    }
    ratios.sort_by(f64::total_cmp);
    let m = ratios.len();
    let median = if m % 2 == 1 { ratios[m / 2] } else { 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]) };
    let deviation = ratios.iter().map(|r| (r - median).abs()).fold(0.0, f64::max);
    Ok(HelixVerdict { is_helix: deviation <= HELIX, deviation, median_ratio: median })
}
