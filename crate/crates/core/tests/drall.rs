mod common;

use common::{curve, direction, rel_close, rng};
use minkruled_core::{
    darboux_data, make_direction, normal_binormal_ratio, reference_helix, DarbouxCase, Degeneracy, InvoluteCurve,
    RulingDirection, TrajectoryRuledSurface,
};
use rand::Rng;

fn surface(s: &common::Sample, dir: RulingDirection) -> TrajectoryRuledSurface {
    TrajectoryRuledSurface::new(InvoluteCurve::new(s.curve.clone(), s.c, common::DOMAIN).unwrap(), dir)
}

/// Closed form with `|<X', X'>|` bounded away from zero, where a relative comparison is meaningful.
fn conditioned(surf: &TrajectoryRuledSurface, s: f64) -> bool {
    let k = surf.kinematics(s).unwrap();
    k.rate_sq.abs() >= 1e-3
}

#[test]
fn closed_form_matches_oracle_in_both_cases() {
    let mut r = rng(11);
    for (case, want) in [(DarbouxCase::Spacelike, 40), (DarbouxCase::Timelike, 20)] {
        let mut checked = 0;
        while checked < want {
            let sample = curve(&mut r, case);
            let surf = surface(&sample, direction(&mut r));
            let s = r.gen_range(0.0..=2.0);
            if !conditioned(&surf, s) {
                continue;
            }
            let closed = surf.drall_closed(s).unwrap();
            let numeric = surf.drall_numeric(s).unwrap();
            assert_eq!(closed.degeneracy, Degeneracy::Regular);
            assert!(
                rel_close(closed.value, numeric.value, 1e-4),
                "{case:?} s = {s}: closed {} vs numeric {}",
                closed.value,
                numeric.value
            );
            checked += 1;
        }
    }
}

#[test]
fn dropping_the_curvature_factor_is_off_by_kappa() {
    let mut r = rng(12);
    let mut off = 0;
    for _ in 0..20 {
        let sample = curve(&mut r, DarbouxCase::Spacelike);
        let surf = surface(&sample, direction(&mut r));
        let s = r.gen_range(0.0..=2.0);
        let k = surf.kinematics(s).unwrap();
        if k.rate_sq.abs() < 1e-3 || k.numerator.abs() < 1e-6 {
            continue;
        }
        let kappa = k.darboux.frame.kappa;
        let numeric = surf.drall_numeric(s).unwrap().value;
        let printed = k.numerator / kappa / k.rate_sq.abs();
        assert!(rel_close(numeric / printed, kappa, 1e-4));
        if (kappa - 1.0).abs() > 0.05 {
            assert!(!rel_close(printed, numeric, 1e-4));
            off += 1;
        }
    }
    assert!(off >= 5);
}

#[test]
fn frame_axes_and_coordinate_planes() {
    let mut r = rng(13);
    for _ in 0..10 {
        let sample = curve(&mut r, DarbouxCase::Spacelike);
        let s = r.gen_range(0.0..=2.0);
        let d = darboux_data(&sample.curve, s).unwrap();
        let (dn, th, w) = (d.d_norm, d.theta_dot, (sample.c - s) * d.frame.kappa);
        let drall =
            |x1: f64, x2: f64, x3: f64| surface(&sample, make_direction(x1, x2, x3).unwrap()).drall_closed(s).unwrap();

        assert_eq!(drall(1.0, 0.0, 0.0).value, 0.0);
        let n = drall(0.0, 1.0, 0.0).value;
        assert!(rel_close(n, w * th / (dn * dn + th * th).abs(), 1e-12));
        let b = drall(0.0, 0.0, 1.0).value;
        assert!(rel_close(b.abs(), (w / th).abs(), 1e-12));

        let (x2, x3) = (0.4, (1.0f64 + 0.16).sqrt());
        let v = drall(0.0, x2, x3).value;
        assert!(rel_close(v, -w * th / (x2 * x2 * dn * dn - th * th).abs(), 1e-12));

        let (x1, x2) = ((1.0f64 + 0.25).sqrt(), 0.5);
        let v = drall(x1, x2, 0.0).value;
        let expected = w * th * x2 * x2 / (-dn * dn + x2 * x2 * th * th).abs();
        assert!(rel_close(v, expected, 1e-12));

        let (x1, x3) = (0.6, 0.8);
        let v = drall(x1, 0.0, x3).value;
        let num = w * (x1 * x3 * dn - th * x3 * x3);
        let den = -x1 * x1 * dn * dn - x3 * x3 * th * th + 2.0 * x1 * x3 * th * dn;
        assert!(rel_close(v.abs(), (num / den).abs(), 1e-12));
    }
}

#[test]
fn normal_to_binormal_ratio() {
    let mut r = rng(14);
    for case in [DarbouxCase::Spacelike, DarbouxCase::Timelike] {
        for _ in 0..8 {
            let sample = curve(&mut r, case);
            let s = r.gen_range(0.0..=2.0);
            let n = surface(&sample, RulingDirection::n_star()).drall_numeric(s).unwrap().value;
            let b = surface(&sample, RulingDirection::b_star()).drall_numeric(s).unwrap().value;
            let d = darboux_data(&sample.curve, s).unwrap();
            assert!(rel_close((n / b).abs(), normal_binormal_ratio(&d), 1e-4), "{case:?}");
        }
    }
}

#[test]
fn helix_ratio_vanishes_exactly_when_angle_is_constant() {
    let helix = reference_helix((-1.0, 4.0)).unwrap();
    let samples = common::grid((0.0, 3.0), 15);
    let bound = |c: &minkruled_core::ParamCurve| {
        let ds: Vec<_> = samples.iter().map(|&s| darboux_data(c, s).unwrap()).collect();
        let max_ratio = ds.iter().map(normal_binormal_ratio).fold(0.0, f64::max);
        let min_d2 = ds.iter().map(|d| d.d_norm * d.d_norm).fold(f64::INFINITY, f64::min);
        let max_th = ds.iter().map(|d| d.theta_dot.abs()).fold(0.0, f64::max);
        let h = minkruled_core::tolerances::HELIX;
        (max_th <= h, max_ratio <= h * h / min_d2)
    };
    let verdict = |c: &minkruled_core::ParamCurve| minkruled_core::is_general_helix(c, &samples).unwrap().is_helix;

    assert_eq!(bound(&helix), (true, true));
    assert!(verdict(&helix));
    let synth = minkruled_core::constant_curvature_curve(1.3, -0.4, (0.0, 3.0)).unwrap();
    assert_eq!(bound(&synth), (true, true));
    assert!(verdict(&synth));

    let mut r = rng(15);
    for _ in 0..5 {
        let c = curve(&mut r, DarbouxCase::Spacelike).curve;
        let samples_c = common::grid((0.0, 2.0), 15);
        let ds: Vec<_> = samples_c.iter().map(|&s| darboux_data(&c, s).unwrap()).collect();
        assert!(ds.iter().any(|d| normal_binormal_ratio(d) > 1e-6));
        assert!(!minkruled_core::is_general_helix(&c, &samples_c).unwrap().is_helix);
    }
}
