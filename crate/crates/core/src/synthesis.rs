//! Timelike curves from prescribed curvature and torsion.
//!
//! The Frenet system is integrated with fixed-step RK4 together with `r' = t`.
//! After each step the frame is re-orthonormalized in the Lorentzian metric
//! (`t` first, then `n`, then `b`). The resulting states are stored on a
//! uniform knot table; a query at `s` takes one RK4 step from the nearest knot.

use std::sync::Arc;

use crate::curve::{ParamCurve, ScalarFn, VectorFn};
use crate::error::{GeometryError, Result};
use crate::fd;
use crate::frenet::Trihedron;
use crate::lorentz::LorentzVector;
use crate::tolerances::{FRAME_ANALYTIC, KAPPA_MIN};

/// Largest integration step.
pub const MAX_STEP: f64 = 1e-3;

/// Extra integrated length beyond each end of the domain, so that stencils
/// centred near the boundary stay on tabulated states.
pub const PAD: f64 = 0.05;

#[derive(Debug, Clone, Copy)]
struct State {
    r: LorentzVector,
    t: LorentzVector,
    n: LorentzVector,
    b: LorentzVector,
}

impl State {
    fn axpy(self, h: f64, k: State) -> State {
        State { r: self.r + k.r * h, t: self.t + k.t * h, n: self.n + k.n * h, b: self.b + k.b * h }
    }

    fn is_finite(&self) -> bool {
        self.r.is_finite() && self.t.is_finite() && self.n.is_finite() && self.b.is_finite()
    }
}

struct Prescription {
    kappa: ScalarFn,
    tau: ScalarFn,
}

impl Prescription {
    fn rhs(&self, s: f64, y: State) -> State {
        let (k, w) = ((self.kappa)(s), (self.tau)(s));
        State { r: y.t, t: y.n * k, n: y.t * k - y.b * w, b: y.n * w }
    }

    fn rk4(&self, s: f64, y: State, h: f64) -> State {
        let k1 = self.rhs(s, y);
        let k2 = self.rhs(s + 0.5 * h, y.axpy(0.5 * h, k1));
        let k3 = self.rhs(s + 0.5 * h, y.axpy(0.5 * h, k2));
        let k4 = self.rhs(s + h, y.axpy(h, k3));
        State {
            r: y.r + (k1.r + k2.r * 2.0 + k3.r * 2.0 + k4.r) * (h / 6.0),
            t: y.t + (k1.t + k2.t * 2.0 + k3.t * 2.0 + k4.t) * (h / 6.0),
            n: y.n + (k1.n + k2.n * 2.0 + k3.n * 2.0 + k4.n) * (h / 6.0),
            b: y.b + (k1.b + k2.b * 2.0 + k3.b * 2.0 + k4.b) * (h / 6.0),
        }
    }
}

/// Lorentzian Gram-Schmidt on `(t, n, b)` with `<t,t> = -1`.
fn reorthonormalize(y: State) -> State {
    let t = y.t * (1.0 / (-y.t.inner(y.t)).sqrt());
    let n = y.n + t * y.n.inner(t);
    let n = n * (1.0 / n.inner(n).sqrt());
    let b = y.b + t * y.b.inner(t) - n * y.b.inner(n);
    let b = b * (1.0 / b.inner(b).sqrt());
    State { r: y.r, t, n, b }
}

struct KnotTable {
    prescription: Prescription,
    /// Parameter of `states[0]`.
    start: f64,
    step: f64,
    states: Vec<State>,
}

impl KnotTable {
    fn state_at(&self, s: f64) -> State {
        let idx = ((s - self.start) / self.step).round();
        let idx = idx.clamp(0.0, (self.states.len() - 1) as f64) as usize;
        let s_k = self.start + idx as f64 * self.step;
        let dh = s - s_k;
        if dh == 0.0 {
            self.states[idx]
        } else {
            self.prescription.rk4(s_k, self.states[idx], dh)
        }
    }
}

/// Build a unit-speed timelike curve with curvature `kappa(s)` and torsion `tau(s)`
/// on `domain`, starting from `initial_frame` at `initial_point` when `s = domain.0`.
///
/// The returned curve reports analytic derivatives assembled from the integrated
/// frame: `r' = t`, `r'' = k n`, `r''' = k' n + k (k t - tau b)`, with `k'` from a
/// five-point stencil on the prescription. Switch it to finite-difference mode to
/// differentiate the integrated positions instead.
pub fn curve_from_curvature(
    kappa: ScalarFn,
    tau: ScalarFn,
    initial_frame: Trihedron,
    initial_point: LorentzVector,
    domain: (f64, f64),
) -> Result<ParamCurve> {
    let (lo, hi) = domain;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(GeometryError::InvalidDomain { lo, hi });
    }
    let res = initial_frame.orthonormality_residual();
    if !(res <= FRAME_ANALYTIC) {
        return Err(GeometryError::InvalidInitialFrame(format!(
            "orthonormality residual {res:e} exceeds {FRAME_ANALYTIC:e}"
        )));
    }
    if initial_frame.orientation() <= 0.0 {
        return Err(GeometryError::InvalidInitialFrame("det(t, n, b) must be positive".into()));
    }
    if !initial_point.is_finite() {
        return Err(GeometryError::InvalidInitialFrame("initial point is not finite".into()));
    }

    let steps_fwd = ((hi + PAD - lo) / MAX_STEP).ceil() as usize;
    let step = (hi + PAD - lo) / steps_fwd as f64;
    let steps_back = (PAD / step).ceil() as usize;

    let prescription = Prescription { kappa, tau };
    for i in 0..=(steps_fwd + steps_back) {
        let s = lo - steps_back as f64 * step + i as f64 * step;
        let k = (prescription.kappa)(s);
        let w = (prescription.tau)(s);
        if !w.is_finite() {
            return Err(GeometryError::IntegrationFailure(format!("torsion not finite at s = {s}")));
        }
        if !(k >= KAPPA_MIN) && s >= lo && s <= hi {
            return Err(GeometryError::InvalidCurvature { s, kappa: k });
        }
    }

    let y0 = State { r: initial_point, t: initial_frame.t, n: initial_frame.n, b: initial_frame.b };
    let march = |count: usize, h: f64| -> Result<Vec<State>> {
        let mut out = Vec::with_capacity(count);
        let mut y = y0;
        for i in 0..count {
            let s = lo + i as f64 * h;
            y = reorthonormalize(prescription.rk4(s, y, h));
            if !y.is_finite() {
                return Err(GeometryError::IntegrationFailure(format!("state became non-finite near s = {}", s + h)));
            }
            out.push(y);
        }
        Ok(out)
    };
    let backward = march(steps_back, -step)?;
    let forward = march(steps_fwd, step)?;

    let mut states: Vec<State> = backward.into_iter().rev().collect();
    states.push(y0);
    states.extend(forward);
    let table = Arc::new(KnotTable { prescription, start: lo - steps_back as f64 * step, step, states });

    let pos: VectorFn = {
        let table = table.clone();
        Arc::new(move |s| table.state_at(s).r)
    };
    let d1: VectorFn = {
        let table = table.clone();
        Arc::new(move |s| table.state_at(s).t)
    };
    let d2: VectorFn = {
        let table = table.clone();
        Arc::new(move |s| {
            let y = table.state_at(s);
            y.n * (table.prescription.kappa)(s)
        })
    };
    let d3: VectorFn = {
        let table = table.clone();
        Arc::new(move |s| {
            let y = table.state_at(s);
            let kf = &table.prescription.kappa;
            let k = kf(s);
            let w = (table.prescription.tau)(s);
            let dk = fd::first(|x| kf(x), s, 1e-3);
            y.n * dk + (y.t * k - y.b * w) * k
        })
    };
    Ok(ParamCurve::new(pos, domain)?.with_derivatives(vec![d1, d2, d3]))
}

/// Constant-coefficient convenience wrapper around [`curve_from_curvature`],
/// starting from the canonical frame at the origin.
pub fn constant_curvature_curve(kappa: f64, tau: f64, domain: (f64, f64)) -> Result<ParamCurve> {
    curve_from_curvature(
        Arc::new(move |_| kappa),
        Arc::new(move |_| tau),
        Trihedron::canonical(),
        LorentzVector::zero(),
        domain,
    )
}
