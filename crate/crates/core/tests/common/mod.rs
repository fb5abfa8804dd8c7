#![allow(dead_code)]

use std::sync::Arc;

use minkruled_core::{
    curve_from_curvature, make_direction, DarbouxCase, LorentzVector, ParamCurve, RulingDirection, ScalarFn, Trihedron,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

pub const DOMAIN: (f64, f64) = (0.0, 2.0);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Sample {
    pub curve: ParamCurve,
    pub kappa: ScalarFn,
    pub tau: ScalarFn,
    pub c: f64,
}

fn boost_rotate(v: LorentzVector, phi: f64, alpha: f64) -> LorentzVector {
    let (ch, sh) = (phi.cosh(), phi.sinh());
    let (x0, x1) = (ch * v.x0 + sh * v.x1, sh * v.x0 + ch * v.x1);
    let (ca, sa) = (alpha.cos(), alpha.sin());
    LorentzVector::new(x0, ca * x1 - sa * v.x2, sa * x1 + ca * v.x2)
}

pub fn frame(rng: &mut ChaCha8Rng) -> Trihedron {
    let phi = rng.gen_range(-1.0..1.0);
    let alpha = rng.gen_range(0.0..std::f64::consts::TAU);
    let c = Trihedron::canonical();
    Trihedron { t: boost_rotate(c.t, phi, alpha), n: boost_rotate(c.n, phi, alpha), b: boost_rotate(c.b, phi, alpha) }
}

/// Quadratic curvature, `tau = kappa * (r0 + r1 s)` with `|r| < 0.9` (spacelike
/// Darboux vector) or `|r| > 1.2` (timelike).
pub fn curve(rng: &mut ChaCha8Rng, case: DarbouxCase) -> Sample {
    let k = [rng.gen_range(0.8..1.8), rng.gen_range(-0.15..0.15), rng.gen_range(-0.05..0.05)];
    let slope: f64 = rng.gen_range(0.03..0.15) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let (r0, r1) = match case {
        DarbouxCase::Spacelike => (rng.gen_range(-0.6..0.6), slope),
        DarbouxCase::Timelike => {
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            (sign * rng.gen_range(1.35..1.8), sign * slope.abs() * if slope > 0.0 { 1.0 } else { -0.3 })
        }
    };
    let kappa: ScalarFn = Arc::new(move |s: f64| k[0] + s * (k[1] + s * k[2]));
    let tau: ScalarFn = {
        let kappa = kappa.clone();
        Arc::new(move |s: f64| kappa(s) * (r0 + r1 * s))
    };
    let f = frame(rng);
    let p = LorentzVector::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let c = if rng.gen_bool(0.5) { rng.gen_range(2.5..4.0) } else { rng.gen_range(-2.0..-0.5) };
    let curve = curve_from_curvature(kappa.clone(), tau.clone(), f, p, DOMAIN).unwrap();
    Sample { curve, kappa, tau, c }
}

pub fn direction(rng: &mut ChaCha8Rng) -> RulingDirection {
    loop {
        let x: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let q = x[0] * x[0] - x[1] * x[1] + x[2] * x[2];
        let e = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        if q.abs() >= 0.1 * e && e >= 0.05 {
            return make_direction(x[0], x[1], x[2]).unwrap();
        }
    }
}

pub fn grid((lo, hi): (f64, f64), n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}
