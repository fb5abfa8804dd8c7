//! Seeded random curves and ruling directions for oracle cross-checks.

use std::sync::Arc;

use minkruled_core::{
    curve_from_curvature, make_direction, DarbouxCase, LorentzVector, ParamCurve, Result, RulingDirection, ScalarFn,
    Trihedron,
};
use rand::Rng;

/// Arc-length domain of every generated curve.
pub const DOMAIN: (f64, f64) = (0.0, 2.0);

#[derive(Clone)]
pub struct RandomCurve {
    pub curve: ParamCurve,
    pub kappa: ScalarFn,
    pub tau: ScalarFn,
    pub case: DarbouxCase,
    /// Involute constant, kept at least 0.5 away from the domain.
    pub c: f64,
    pub frame: Trihedron,
    pub point: LorentzVector,
}

/// Proper Lorentz transform: boost with rapidity `phi` along `e1`, then rotation by `alpha` in the `e1 e2` plane.
pub fn boost_rotate(v: LorentzVector, phi: f64, alpha: f64) -> LorentzVector {
    let (ch, sh) = (phi.cosh(), phi.sinh());
    let (x0, x1) = (ch * v.x0 + sh * v.x1, sh * v.x0 + ch * v.x1);
    let (ca, sa) = (alpha.cos(), alpha.sin());
    LorentzVector::new(x0, ca * x1 - sa * v.x2, sa * x1 + ca * v.x2)
}

pub fn random_frame<R: Rng>(rng: &mut R) -> Trihedron {
    let phi = rng.gen_range(-1.0..1.0);
    let alpha = rng.gen_range(0.0..std::f64::consts::TAU);
    let c = Trihedron::canonical();
    Trihedron { t: boost_rotate(c.t, phi, alpha), n: boost_rotate(c.n, phi, alpha), b: boost_rotate(c.b, phi, alpha) }
}

/// Curve with quadratic curvature and `tau = kappa * r(s)` for a linear ratio `r`:
/// `|r| <= 0.9` for a spacelike Darboux vector, `|r| >= 1.2` for a timelike one.
/// The ratio always has a non-zero slope, so the curve is never a general helix.
pub fn random_curve<R: Rng>(rng: &mut R, case: DarbouxCase) -> Result<RandomCurve> {
    let k = [rng.gen_range(0.8..1.8), rng.gen_range(-0.15..0.15), rng.gen_range(-0.05..0.05)];
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let slope = sign * rng.gen_range(0.03..0.15);
    let (r0, r1) = match case {
        DarbouxCase::Spacelike => (rng.gen_range(-0.6..0.6), slope),
        DarbouxCase::Timelike => {
            let s = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let r1 = rng.gen_range(0.03..0.15) * if rng.gen_bool(0.5) { 1.0 } else { -0.3 };
            (s * rng.gen_range(1.35..1.8), s * r1)
        }
    };
    let kappa: ScalarFn = Arc::new(move |s: f64| k[0] + s * (k[1] + s * k[2]));
    let tau: ScalarFn = {
        let kappa = kappa.clone();
        Arc::new(move |s: f64| kappa(s) * (r0 + r1 * s))
    };
    let frame = random_frame(rng);
    let point = LorentzVector::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let c = if rng.gen_bool(0.5) { rng.gen_range(2.5..4.0) } else { rng.gen_range(-2.0..-0.5) };
    let curve = curve_from_curvature(kappa.clone(), tau.clone(), frame, point, DOMAIN)?;
    Ok(RandomCurve { curve, kappa, tau, case, c, frame, point })
}

/// Direction with coefficients in `[-1, 1]`, kept away from the null cone of the frame.
pub fn random_direction<R: Rng>(rng: &mut R) -> RulingDirection {
    loop {
        let x: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let q = x[0] * x[0] - x[1] * x[1] + x[2] * x[2];
        let e = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        if q.abs() >= 0.1 * e && e >= 0.05 {
            if let Ok(d) = make_direction(x[0], x[1], x[2]) {
                return d;
            }
        }
    }
}

/// Uniform sample in `[lo, hi]`.
pub fn random_s<R: Rng>(rng: &mut R, (lo, hi): (f64, f64)) -> f64 {
    rng.gen_range(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use minkruled_core::darboux_data;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_curves_land_in_the_requested_case() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for case in [DarbouxCase::Spacelike, DarbouxCase::Timelike] {
            for _ in 0..4 {
                let rc = random_curve(&mut rng, case).unwrap();
                assert!(rc.frame.orthonormality_residual() < 1e-12);
                assert!(rc.frame.orientation() > 0.0);
                for s in [0.0, 1.0, 2.0] {
                    assert_eq!(darboux_data(&rc.curve, s).unwrap().case, case);
                }
            }
        }
    }
}
