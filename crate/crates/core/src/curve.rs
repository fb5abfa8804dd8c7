//! Parametrized timelike curves and their derivatives.

use std::fmt;
use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::fd;
use crate::lorentz::LorentzVector;
use crate::tolerances::{H_FD_HIGH, H_FD_LOW, SPEED};

pub type VectorFn = Arc<dyn Fn(f64) -> LorentzVector + Send + Sync>;
pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeMode {
    Analytic,
    FiniteDifference,
}

/// A curve `s -> r(s)` in Minkowski space, assumed parametrized by arc length.
///
/// The position evaluator must accept parameters slightly outside `domain`
/// (a few finite-difference steps); only `domain` itself is validated.
#[derive(Clone)]
pub struct ParamCurve {
    position: VectorFn,
    derivatives: Vec<VectorFn>,
    domain: (f64, f64),
    mode: DerivativeMode,
}

impl fmt::Debug for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParamCurve")
            .field("domain", &self.domain)
            .field("mode", &self.mode)
            .field("analytic_orders", &self.derivatives.len())
            .finish()
    }
}

impl ParamCurve {
    /// Curve with finite-difference derivatives only.
    pub fn new(position: VectorFn, domain: (f64, f64)) -> Result<Self> {
        let (lo, hi) = domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(GeometryError::InvalidDomain { lo, hi });
        }
        Ok(Self { position, derivatives: Vec::new(), domain, mode: DerivativeMode::FiniteDifference })
    }

    /// Attach analytic evaluators for r', r'', r''' (in that order; a prefix is allowed)
    /// and switch to [`DerivativeMode::Analytic`].
    pub fn with_derivatives(mut self, derivatives: Vec<VectorFn>) -> Self {
        self.derivatives = derivatives;
        self.mode = DerivativeMode::Analytic;
        self
    }

    pub fn with_mode(mut self, mode: DerivativeMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn mode(&self) -> DerivativeMode {
        self.mode
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn contains(&self, s: f64) -> bool {
        s >= self.domain.0 && s <= self.domain.1
    }

    pub(crate) fn check_domain(&self, s: f64) -> Result<()> {
        if s.is_finite() && self.contains(s) {
            Ok(())
        } else {
            Err(GeometryError::OutOfDomain { s, lo: self.domain.0, hi: self.domain.1 })
        }
    }

    pub fn position(&self, s: f64) -> Result<LorentzVector> {
        self.check_domain(s)?;
        Ok(self.eval(s))
    }

    /// Unchecked evaluation, used by stencils that step just outside the domain.
    pub(crate) fn eval(&self, s: f64) -> LorentzVector {
        (self.position)(s)
    }

    /// r', ..., r^(order) at `s`, `order` in 1..=3.
    pub fn derivatives(&self, s: f64, order: usize) -> Result<Vec<LorentzVector>> {
        assert!((1..=3).contains(&order), "derivative order must be 1..=3");
        self.check_domain(s)?;
        self.derivatives_unchecked(s, order)
    }

    pub(crate) fn derivatives_unchecked(&self, s: f64, order: usize) -> Result<Vec<LorentzVector>> {
        match self.mode {
            DerivativeMode::Analytic => {
                if self.derivatives.len() < order {
                    return Err(GeometryError::MissingAnalyticDerivative { order });
                }
                Ok(self.derivatives[..order].iter().map(|d| d(s)).collect())
            }
            DerivativeMode::FiniteDifference => {
                let p = |x: f64| (self.position)(x);
                let mut out = vec![fd::first(p, s, H_FD_LOW)];
                if order >= 2 {
                    out.push(fd::second(p, s, H_FD_LOW));
                }
                if order >= 3 {
                    out.push(fd::third(p, s, H_FD_HIGH));
                }
                Ok(out)
            }
        }
    }

    /// Check `<r', r'> = -1` at `s`.
    pub fn check_unit_speed(&self, s: f64) -> Result<LorentzVector> {
        let t = self.derivatives(s, 1)?[0];
        let q = t.inner(t);
        if (q + 1.0).abs() > SPEED || !q.is_finite() {
            return Err(GeometryError::NotUnitSpeed { s, speed_sq: q });
        }
        Ok(t)
    }

    /// Check unit speed at every sample; returns the worst `|<r', r'> + 1|`.
    pub fn validate_unit_speed(&self, samples: &[f64]) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for &s in samples {
            let t = self.check_unit_speed(s)?;
            worst = worst.max((t.inner(t) + 1.0).abs());
        }
        Ok(worst)
    }
}

const INV_SQRT3: f64 = 0.577_350_269_189_625_8;

/// The unit-speed timelike helix
/// `r(s) = (2 sinh(s/sqrt3), 2 cosh(s/sqrt3), s/sqrt3)` with
/// curvature 2/3 and torsion 1/3, with analytic derivatives.
pub fn reference_helix(domain: (f64, f64)) -> Result<ParamCurve> {
    let k = INV_SQRT3;
    let pos: VectorFn = Arc::new(move |s| {
        let a = s * k;
        LorentzVector::new(2.0 * a.sinh(), 2.0 * a.cosh(), a)
    });
    let d1: VectorFn = Arc::new(move |s| {
        let a = s * k;
        LorentzVector::new(2.0 * k * a.cosh(), 2.0 * k * a.sinh(), k)
    });
    let d2: VectorFn = Arc::new(move |s| {
        let a = s * k;
        LorentzVector::new(2.0 / 3.0 * a.sinh(), 2.0 / 3.0 * a.cosh(), 0.0)
    });
    let d3: VectorFn = Arc::new(move |s| {
        let a = s * k;
        LorentzVector::new(2.0 / 3.0 * k * a.cosh(), 2.0 / 3.0 * k * a.sinh(), 0.0)
    });
    Ok(ParamCurve::new(pos, domain)?.with_derivatives(vec![d1, d2, d3]))
}

/// The timelike straight line `r(s) = (s, 0, 0)`.
pub fn timelike_line(domain: (f64, f64)) -> Result<ParamCurve> {
    let pos: VectorFn = Arc::new(|s| LorentzVector::new(s, 0.0, 0.0));
    let d1: VectorFn = Arc::new(|_| LorentzVector::new(1.0, 0.0, 0.0));
    let d0: VectorFn = Arc::new(|_| LorentzVector::zero());
    Ok(ParamCurve::new(pos, domain)?.with_derivatives(vec![d1, d0.clone(), d0]))
}
