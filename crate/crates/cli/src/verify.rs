//! Randomized cross-check of closed forms against finite-difference oracles.

use std::fmt::Write as _;

use minkruled_core::{striction_point, Degeneracy, InvoluteCurve, TrajectoryRuledSurface};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{direction_label, SceneConfig};
use crate::error::CliError;
use crate::random::{random_direction, random_s};

/// Relative agreement required between closed form and oracle.
pub const ORACLE_REL: f64 = 1e-4;
/// Trials with `|<X', X'>|` below this are too ill-conditioned for a relative comparison.
pub const MIN_RATE_SQ: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    pub text: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
}

pub fn agrees(closed: f64, numeric: f64) -> bool {
    (closed - numeric).abs() <= ORACLE_REL * numeric.abs().max(1.0)
}

pub fn run_verify(cfg: &SceneConfig, trials: usize, seed: u64) -> Result<VerifyOutcome, CliError> {
    let curve = cfg.build_curve()?;
    let dirs = cfg.resolved_directions()?;
    let pieces = cfg.s_pieces();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    let _ = writeln!(out, "verify: {} trials, seed {seed}", trials);
    let (mut checked, mut skipped, mut failures) = (0, 0, 0);

    for trial in 0..trials {
        let (dir, label) = if rng.gen_bool(0.5) {
            let i = rng.gen_range(0..dirs.len());
            (dirs[i], direction_label(&dirs[i], i))
        } else {
            (random_direction(&mut rng), "random".to_string())
        };
        let piece = pieces[rng.gen_range(0..pieces.len())];
        let s = random_s(&mut rng, piece);
        let surf = TrajectoryRuledSurface::new(InvoluteCurve::new(curve.clone(), cfg.c, piece)?, dir);
        let closed = surf.drall_closed(s)?;
        let numeric = surf.drall_numeric(s)?;
        let [x1, x2, x3] = dir.coefficients();
        let head = format!("trial {trial:>4}: {label} ({x1:+.4}, {x2:+.4}, {x3:+.4}) s = {s:.6}");

        if closed.degeneracy == Degeneracy::Cylindrical {
            if numeric.degeneracy == Degeneracy::Cylindrical {
                checked += 1;
            } else {
                failures += 1;
                let _ = writeln!(out, "{head}: FAIL closed form cylindrical, oracle drall {:e}", numeric.value);
            }
            continue;
        }
        if closed.degeneracy != Degeneracy::Regular || closed.ruling_rate_sq.abs() < MIN_RATE_SQ {
            skipped += 1;
            continue;
        }
        checked += 1;
        let mut ok = agrees(closed.value, numeric.value);
        let p = striction_point(&surf, s)?;
        ok &= agrees(p.offset, p.numeric_offset);
        if !ok {
            failures += 1;
            let _ = writeln!(
                out,
                "{head}: FAIL drall {:e} vs {:e}, striction {:e} vs {:e}",
                closed.value, numeric.value, p.offset, p.numeric_offset
            );
        }
    }
    let _ = writeln!(out, "checked {checked}, skipped {skipped} (ill-conditioned), failures {failures}");
    Ok(VerifyOutcome { text: out, checked, skipped, failures })
}
