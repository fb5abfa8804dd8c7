//! Spacelike involutes `g(s) = r(s) + (c - s) t(s)` of timelike curves.
//!
//! Everything stays parametrized by the base arc length `s`. The involute
//! has a cusp at `s = c`, where its velocity `(c - s) k n` vanishes.

use crate::curve::ParamCurve;
use crate::error::{GeometryError, Result};
use crate::frenet::{self, DarbouxCase, DarbouxData};
use crate::lorentz::{triple, LorentzVector};
use crate::tolerances::EPS_CUSP;

#[derive(Debug, Clone)]
pub struct InvoluteCurve {
    base: ParamCurve,
    c: f64,
    domain: (f64, f64),
}

impl InvoluteCurve {
    /// Involute on `domain`, which must lie inside the base domain and stay
    /// at least [`EPS_CUSP`] away from `c`.
    pub fn new(base: ParamCurve, c: f64, domain: (f64, f64)) -> Result<Self> {
        let (lo, hi) = domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(GeometryError::InvalidDomain { lo, hi });
        }
        base.check_domain(lo)?;
        base.check_domain(hi)?;
        if c > lo - EPS_CUSP && c < hi + EPS_CUSP {
            return Err(GeometryError::CuspInDomain { lo, hi, c });
        }
        Ok(Self { base, c, domain })
    }

    /// Involute over the whole base domain, cusp included.
    pub fn unrestricted(base: ParamCurve, c: f64) -> Self {
        let domain = base.domain();
        Self { base, c, domain }
    }

    pub fn base(&self) -> &ParamCurve {
        &self.base
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub(crate) fn check_domain(&self, s: f64) -> Result<()> {
        let (lo, hi) = self.domain;
        if s.is_finite() && s >= lo && s <= hi {
            Ok(())
        } else {
            Err(GeometryError::OutOfDomain { s, lo, hi })
        }
    }

    /// `r(s) + (c - s) t(s)` with the signed offset.
    pub fn point(&self, s: f64) -> Result<LorentzVector> {
        self.check_domain(s)?;
        self.point_unchecked(s)
    }

    pub(crate) fn point_unchecked(&self, s: f64) -> Result<LorentzVector> {
        let t = self.base.derivatives_unchecked(s, 1)?[0];
        Ok(self.base.eval(s) + t * (self.c - s))
    }

    /// `(c - s) k(s) n(s)`.
    pub fn velocity(&self, s: f64) -> Result<LorentzVector> {
        self.check_domain(s)?;
        let f = frenet::apparatus_unchecked(&self.base, s)?;
        Ok(f.n * ((self.c - s) * f.kappa))
    }

    pub fn frame(&self, s: f64) -> Result<InvoluteFrame> {
        self.check_domain(s)?;
        Ok(InvoluteFrame::from_darboux(&frenet::darboux_unchecked(&self.base, s)?))
    }

    /// Frame without the domain check, for stencils straddling the domain ends.
    pub(crate) fn frame_unchecked(&self, s: f64) -> Result<InvoluteFrame> {
        Ok(InvoluteFrame::from_darboux(&frenet::darboux_unchecked(&self.base, s)?))
    }
}

/// Frenet frame of the involute expressed through the base frame.
///
/// Spacelike Darboux vector:
/// `t* = n`, `n* = -cosh(theta) t + sinh(theta) b`, `b* = -sinh(theta) t + cosh(theta) b`,
/// with `t*`, `b*` spacelike and `n*` timelike.
///
/// Timelike Darboux vector:
/// `t* = n`, `n* = sinh(theta) t - cosh(theta) b`, `b* = -cosh(theta) t + sinh(theta) b`,
/// with `t*`, `n*` spacelike and `b*` timelike.
///
/// In both cases `n*` is parallel to `dt*/ds` and `det(t*, n*, b*) = +1`.
/// The frame does not depend on `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvoluteFrame {
    pub t_star: LorentzVector,
    pub n_star: LorentzVector,
    pub b_star: LorentzVector,
    pub case: DarbouxCase,
}

impl InvoluteFrame {
    pub fn from_darboux(d: &DarbouxData) -> Self {
        let (ch, sh) = (d.theta.cosh(), d.theta.sinh());
        let f = &d.frame;
        match d.case {
            DarbouxCase::Spacelike => {
                Self { t_star: f.n, n_star: f.t * (-ch) + f.b * sh, b_star: f.t * (-sh) + f.b * ch, case: d.case }
            }
            DarbouxCase::Timelike => {
                Self { t_star: f.n, n_star: f.t * sh - f.b * ch, b_star: f.t * (-ch) + f.b * sh, case: d.case }
            }
        }
    }

    /// Lorentzian squares expected for `(t*, n*, b*)`.
    pub fn signature(&self) -> [f64; 3] {
        match self.case {
            DarbouxCase::Spacelike => [1.0, -1.0, 1.0],
            DarbouxCase::Timelike => [1.0, 1.0, -1.0],
        }
    }

    /// Largest deviation from the expected signature and mutual orthogonality.
    pub fn signature_residual(&self) -> f64 {
        let [a, b, c] = self.signature();
        let (t, n, w) = (self.t_star, self.n_star, self.b_star);
        [
            (t.inner(t) - a).abs(),
            (n.inner(n) - b).abs(),
            (w.inner(w) - c).abs(),
            t.inner(n).abs(),
            n.inner(w).abs(),
            w.inner(t).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn orientation(&self) -> f64 {
        triple(self.t_star, self.n_star, self.b_star)
    }

    /// `x1 t* + x2 n* + x3 b*`.
    pub fn combine(&self, x: [f64; 3]) -> LorentzVector {
        self.t_star * x[0] + self.n_star * x[1] + self.b_star * x[2]
    }
}
