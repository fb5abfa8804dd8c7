//! Plain-text analysis report for a scene.

use std::fmt::Write as _;

use minkruled_core::frenet::HelixVerdict;
use minkruled_core::{
    classify_developability, darboux_data, is_general_helix, striction_point, DarbouxCase, Degeneracy,
    DevelopabilityReason, DevelopabilityReport, GeometryError, InvoluteCurve, ParamCurve, RulingDirection,
    TrajectoryRuledSurface,
};

use crate::config::{direction_label, SceneConfig};
use crate::error::CliError;
use crate::mesh::fmt_coord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Developable(DevelopabilityReason),
    NotDevelopable,
    /// Some sample could not be evaluated.
    Undetermined,
}

impl Verdict {
    pub fn describe(&self) -> String {
        match self {
            Verdict::Developable(r) => format!("developable ({})", r.describe()),
            Verdict::NotDevelopable => "not developable".to_string(),
            Verdict::Undetermined => "undetermined".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSummary {
    pub label: String,
    pub direction: RulingDirection,
    pub verdict: Verdict,
    pub max_abs_drall: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub directions: Vec<DirectionSummary>,
    pub warnings: Vec<String>,
}

/// Evenly spaced samples per piece, endpoints included.
pub fn piece_samples(pieces: &[(f64, f64)], per_piece: usize) -> Vec<Vec<f64>> {
    pieces
        .iter()
        .map(|&(lo, hi)| {
            (0..per_piece)
                .map(|i| if i + 1 == per_piece { hi } else { lo + (hi - lo) * i as f64 / (per_piece - 1) as f64 })
                .collect()
        })
        .collect()
}

fn sci(x: f64) -> String {
    if x.is_finite() {
        format!("{:.6e}", x + 0.0)
    } else {
        format!("{x}")
    }
}

fn case_name(c: DarbouxCase) -> &'static str {
    match c {
        DarbouxCase::Spacelike => "spacelike Darboux vector (|kappa| > |tau|)",
        DarbouxCase::Timelike => "timelike Darboux vector (|kappa| < |tau|)",
    }
}

fn merge_reports(parts: &[DevelopabilityReport], dir: &RulingDirection) -> (bool, Option<DevelopabilityReason>, f64) {
    let developable = parts.iter().all(|r| r.developable);
    let max_drall = parts.iter().map(|r| r.max_abs_drall).fold(0.0, f64::max);
    if !developable {
        return (false, None, max_drall);
    }
    let all_cyl = parts.iter().all(|r| r.reason == Some(DevelopabilityReason::CylindricalRuling));
    let helix = parts.iter().all(|r| r.max_abs_theta_dot <= minkruled_core::tolerances::HELIX);
    let reason = if dir.x2 == 0.0 && dir.x3 == 0.0 {
        DevelopabilityReason::TangentRuling
    } else if all_cyl {
        DevelopabilityReason::CylindricalRuling
    } else if helix {
        DevelopabilityReason::HelixBase
    } else {
        DevelopabilityReason::AngleProfile
    };
    (true, Some(reason), max_drall)
}

pub fn run_report(cfg: &SceneConfig) -> Result<Report, CliError> {
    let curve = cfg.build_curve()?;
    let dirs = cfg.resolved_directions()?;
    let pieces = cfg.s_pieces();
    let samples = piece_samples(&pieces, cfg.report_samples);
    let mut warnings = Vec::new();
    let mut out = String::new();

    let mode = match curve.mode() {
        minkruled_core::DerivativeMode::Analytic => "analytic derivatives",
        minkruled_core::DerivativeMode::FiniteDifference => "finite-difference derivatives",
    };
    let _ = writeln!(out, "curve: {} ({mode})", cfg.curve_name());
    let (dlo, dhi) = curve.domain();
    let _ = writeln!(out, "curve domain: [{}, {}]", fmt_coord(dlo), fmt_coord(dhi));
    let _ = writeln!(out, "c: {}", fmt_coord(cfg.c));
    let _ = writeln!(out, "s_range: [{}, {}]", fmt_coord(cfg.s_range[0]), fmt_coord(cfg.s_range[1]));
    for (lo, hi) in &pieces {
        let _ = writeln!(out, "  piece: [{}, {}]", fmt_coord(*lo), fmt_coord(*hi));
    }
    if cfg.crosses_cusp() {
        let _ = writeln!(
            out,
            "note: the involute has a cusp at s = c; the gap [c - {gap}, c + {gap}] is skipped. \
             Points use the signed offset (c - s), so beyond the cusp they differ from the \
             |c - s| construction by reflection through the base point along t.",
            gap = cfg.cusp_gap
        );
    }

    let _ = writeln!(out, "\nbase curve samples");
    let _ = writeln!(out, "{:>14} {:>14} {:>14} {:>14} {:>14}  case", "s", "kappa", "tau", "theta", "theta'");
    let mut cases = Vec::new();
    for &s in samples.iter().flatten() {
        match darboux_data(&curve, s) {
            Ok(d) => {
                cases.push(d.case);
                let _ = writeln!(
                    out,
                    "{:>14} {:>14} {:>14} {:>14} {:>14}  {}",
                    fmt_coord(s),
                    fmt_coord(d.frame.kappa),
                    fmt_coord(d.frame.tau),
                    fmt_coord(d.theta),
                    fmt_coord(d.theta_dot),
                    match d.case {
                        DarbouxCase::Spacelike => "I",
                        DarbouxCase::Timelike => "II",
                    }
                );
            }
            Err(e) => {
                let _ = writeln!(out, "{:>14} error: {e}", fmt_coord(s));
                warnings.push(format!("base curve at s = {s}: {e}"));
            }
        }
    }
    cases.dedup();
    match cases.as_slice() {
        [c] => {
            let _ = writeln!(out, "darboux case: {}", case_name(*c));
        }
        [] => {
            let _ = writeln!(out, "darboux case: unavailable");
        }
        _ => {
            let _ = writeln!(out, "darboux case: changes along the range");
            warnings.push("Darboux vector changes causal class inside s_range".to_string());
        }
    }
    let all: Vec<f64> = samples.iter().flatten().copied().collect();
    match is_general_helix(&curve, &all) {
        Ok(HelixVerdict { is_helix, deviation, median_ratio }) => {
            let _ = writeln!(
                out,
                "helix verdict: {} (tau/kappa median {}, max deviation {})",
                if is_helix { "general helix" } else { "not a general helix" },
                fmt_coord(median_ratio),
                sci(deviation)
            );
        }
        Err(e) => {
            let _ = writeln!(out, "helix verdict: unavailable ({e})");
            warnings.push(format!("helix verdict: {e}"));
        }
    }

    let mut summaries = Vec::new();
    for (idx, dir) in dirs.iter().enumerate() {
        let label = direction_label(dir, idx);
        let causal = match dir.causal {
            minkruled_core::ruled::RulingCausality::Spacelike => "spacelike",
            minkruled_core::ruled::RulingCausality::Timelike => "timelike",
        };
        let _ = writeln!(
            out,
            "\ndirection {label}: (x1, x2, x3) = ({}, {}, {}), {causal}",
            fmt_coord(dir.x1),
            fmt_coord(dir.x2),
            fmt_coord(dir.x3)
        );
        let summary = direction_section(&mut out, &mut warnings, &curve, cfg.c, &pieces, &samples, dir, label);
        summaries.push(summary);
    }

    let _ = writeln!(out, "\nwarnings: {}", warnings.len());
    for w in &warnings {
        let _ = writeln!(out, "  {w}");
    }
    Ok(Report { text: out, directions: summaries, warnings })
}

#[allow(clippy::too_many_arguments)]
fn direction_section(
    out: &mut String,
    warnings: &mut Vec<String>,
    curve: &ParamCurve,
    c: f64,
    pieces: &[(f64, f64)],
    samples: &[Vec<f64>],
    dir: &RulingDirection,
    label: String,
) -> DirectionSummary {
    let _ = writeln!(
        out,
        "  {:>14} {:>16} {:>16}  {:<12} {:>16} {:>16}",
        "s", "drall", "drall (fd)", "ruling", "striction", "striction (fd)"
    );
    let mut parts = Vec::new();
    let mut failed = false;
    for (&piece, ss) in pieces.iter().zip(samples) {
        let surf = match InvoluteCurve::new(curve.clone(), c, piece) {
            Ok(inv) => TrajectoryRuledSurface::new(inv, *dir),
            Err(e) => {
                warnings.push(format!("{label}: involute on [{}, {}]: {e}", piece.0, piece.1));
                failed = true;
                continue;
            }
        };
        for &s in ss {
            let closed = surf.drall_closed(s);
            let numeric = surf.drall_numeric(s);
            let (dc, kind) = match &closed {
                Ok(d) => (sci(d.value), format!("{:?}", d.degeneracy).to_lowercase()),
                Err(_) => ("error".to_string(), "error".to_string()),
            };
            let dn = match &numeric {
                Ok(d) if d.degeneracy == Degeneracy::Cylindrical => "cylindrical".to_string(),
                Ok(d) => sci(d.value),
                Err(_) => "error".to_string(),
            };
            let (sc, sn) = match striction_point(&surf, s) {
                Ok(p) => (sci(p.offset), sci(p.numeric_offset)),
                Err(GeometryError::CylindricalRuling { .. }) => ("-".to_string(), "-".to_string()),
                Err(GeometryError::SingularRuling { .. }) => ("singular".to_string(), "singular".to_string()),
                Err(_) => ("error".to_string(), "error".to_string()),
            };
            let _ = writeln!(out, "  {:>14} {:>16} {:>16}  {:<12} {:>16} {:>16}", fmt_coord(s), dc, dn, kind, sc, sn);
            match closed {
                Ok(d) if d.degeneracy == Degeneracy::Singular => {
                    warnings.push(format!("{label}: null ruling rate at s = {s}, drall singular"));
                }
                Err(e) => {
                    warnings.push(format!("{label}: drall at s = {s}: {e}"));
                    failed = true;
                }
                _ => {}
            }
            if let Err(e) = numeric {
                warnings.push(format!("{label}: numeric drall at s = {s}: {e}"));
            }
        }
        match classify_developability(&surf, ss) {
            Ok(r) => parts.push(r),
            Err(_) => failed = true,
        }
    }
    let (developable, reason, max_drall) = merge_reports(&parts, dir);
    let verdict = if failed {
        Verdict::Undetermined
    } else if developable {
        Verdict::Developable(reason.expect("developable surfaces carry a reason"))
    } else {
        Verdict::NotDevelopable
    };
    let _ = writeln!(out, "  max |drall|: {}", sci(max_drall));
    let _ = writeln!(out, "  verdict: {}", verdict.describe());
    DirectionSummary { label, direction: *dir, verdict, max_abs_drall: max_drall }
}
