//! JSON scene configuration.

use std::path::Path;
use std::sync::Arc;

use minkruled_core::{
    curve_from_curvature, make_direction, reference_helix, LorentzVector, ParamCurve, RulingDirection, ScalarFn,
    Trihedron,
};
use serde::Deserialize;

use crate::error::CliError;

/// Default domain of the built-in helix.
pub const HELIX_DOMAIN: (f64, f64) = (-20.0, 20.0);

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    pub curve: CurveSpec,
    /// Involute constant `c`.
    pub c: f64,
    pub directions: Vec<DirectionSpec>,
    pub s_range: [f64; 2],
    pub v_range: [f64; 2],
    /// `[ns, nv]`.
    pub grid: [usize; 2],
    #[serde(default)]
    pub outputs: Vec<OutputSpec>,
    /// Half-width of the gap left around the cusp when `s_range` crosses `c`.
    #[serde(default = "default_cusp_gap")]
    pub cusp_gap: f64,
    /// Samples per s-piece in the report and in developability checks.
    #[serde(default = "default_report_samples")]
    pub report_samples: usize,
}

fn default_cusp_gap() -> f64 {
    0.01
}

fn default_report_samples() -> usize {
    9
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CurveSpec {
    /// `r(s) = (2 sinh(s/sqrt3), 2 cosh(s/sqrt3), s/sqrt3)`.
    #[serde(alias = "paper-helix")]
    ReferenceHelix,
    Prescribed {
        kappa: ScalarSpec,
        tau: ScalarSpec,
        domain: [f64; 2],
        #[serde(default)]
        initial_frame: Option<FrameSpec>,
        #[serde(default)]
        initial_point: Option<[f64; 3]>,
    },
}

/// A real function of arc length: polynomial coefficients (constant term first)
/// or a table of `[s, value]` pairs with linear interpolation.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Constant(f64),
    Poly { poly: Vec<f64> },
    Table { table: Vec<[f64; 2]> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    pub t: [f64; 3],
    pub n: [f64; 3],
    pub b: [f64; 3],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum DirectionSpec {
    /// `"t*"`, `"n*"` or `"b*"`.
    Named(String),
    Coefficients([f64; 3]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshFormat {
    Obj,
    Csv,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: MeshFormat,
    /// `{dir}` is replaced by the direction label; with several directions and
    /// no placeholder the label is appended to the file stem.
    pub path: String,
}

impl ScalarSpec {
    fn validate(&self, field: &str) -> Result<(), CliError> {
        match self {
            ScalarSpec::Constant(v) if !v.is_finite() => Err(CliError::config(field, "value must be finite")),
            ScalarSpec::Poly { poly } if poly.is_empty() || poly.iter().any(|c| !c.is_finite()) => {
                Err(CliError::config(field, "polynomial needs at least one finite coefficient"))
            }
            ScalarSpec::Table { table } => {
                if table.len() < 2 {
                    return Err(CliError::config(field, "table needs at least two rows"));
                }
                if table.iter().any(|r| !r[0].is_finite() || !r[1].is_finite()) {
                    return Err(CliError::config(field, "table entries must be finite"));
                }
                if table.windows(2).any(|w| w[1][0] <= w[0][0]) {
                    return Err(CliError::config(field, "table abscissae must be strictly increasing"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn to_fn(&self) -> ScalarFn {
        match self.clone() {
            ScalarSpec::Constant(v) => Arc::new(move |_| v),
            ScalarSpec::Poly { poly } => Arc::new(move |s| poly.iter().rev().fold(0.0, |acc, c| acc * s + c)),
            ScalarSpec::Table { table } => Arc::new(move |s| interpolate(&table, s)),
        }
    }
}

/// Linear interpolation, constant beyond the ends.
fn interpolate(table: &[[f64; 2]], s: f64) -> f64 {
    let last = table.len() - 1;
    if s <= table[0][0] {
        return table[0][1];
    }
    if s >= table[last][0] {
        return table[last][1];
    }
    let i = table.partition_point(|r| r[0] <= s) - 1;
    let ([s0, y0], [s1, y1]) = (table[i], table[i + 1]);
    y0 + (y1 - y0) * (s - s0) / (s1 - s0)
}

fn vec3(a: [f64; 3]) -> LorentzVector {
    LorentzVector::new(a[0], a[1], a[2])
}

impl DirectionSpec {
    pub fn resolve(&self, index: usize) -> Result<RulingDirection, CliError> {
        let field = format!("directions[{index}]");
        match self {
            DirectionSpec::Named(name) => match name.as_str() {
                "t*" | "t_star" => Ok(RulingDirection::t_star()),
                "n*" | "n_star" => Ok(RulingDirection::n_star()),
                "b*" | "b_star" => Ok(RulingDirection::b_star()),
                other => Err(CliError::config(&field, format!("unknown direction name {other:?}"))),
            },
            DirectionSpec::Coefficients([a, b, c]) => {
                make_direction(*a, *b, *c).map_err(|e| CliError::config(&field, e.to_string()))
            }
        }
    }
}

/// Label used in reports and output file names.
pub fn direction_label(dir: &RulingDirection, index: usize) -> String {
    match dir.label() {
        "t*" => "t_star".to_string(),
        "n*" => "n_star".to_string(),
        "b*" => "b_star".to_string(),
        _ => format!("d{index}"),
    }
}

impl SceneConfig {
    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: SceneConfig = serde_json::from_str(text)
            .map_err(|e| CliError::Config(format!("line {} column {}: {e}", e.line(), e.column())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if !self.c.is_finite() {
            return Err(CliError::config("c", "must be finite"));
        }
        let [lo, hi] = self.s_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(CliError::config("s_range", "expected [lo, hi] with lo < hi"));
        }
        let [vlo, vhi] = self.v_range;
        if !(vlo.is_finite() && vhi.is_finite() && vlo < vhi) {
            return Err(CliError::config("v_range", "expected [lo, hi] with lo < hi"));
        }
        if self.grid[0] < 2 || self.grid[1] < 2 {
            return Err(CliError::config("grid", "ns and nv must both be at least 2"));
        }
        if !(self.cusp_gap >= minkruled_core::tolerances::EPS_CUSP) {
            return Err(CliError::config(
                "cusp_gap",
                format!("must be at least {}", minkruled_core::tolerances::EPS_CUSP),
            ));
        }
        if self.report_samples < 2 {
            return Err(CliError::config("report_samples", "must be at least 2"));
        }
        if self.directions.is_empty() {
            return Err(CliError::config("directions", "at least one direction is required"));
        }
        for (i, d) in self.directions.iter().enumerate() {
            d.resolve(i)?;
        }
        if self.s_pieces().is_empty() {
            return Err(CliError::config("s_range", "nothing left after removing the cusp gap"));
        }
        let (dlo, dhi) = self.curve_domain();
        if lo < dlo || hi > dhi {
            return Err(CliError::config("s_range", format!("must lie inside the curve domain [{dlo}, {dhi}]")));
        }
        if let CurveSpec::Prescribed { kappa, tau, domain, initial_frame, initial_point } = &self.curve {
            kappa.validate("curve.kappa")?;
            tau.validate("curve.tau")?;
            if !(domain[0].is_finite() && domain[1].is_finite() && domain[0] < domain[1]) {
                return Err(CliError::config("curve.domain", "expected [lo, hi] with lo < hi"));
            }
            if let Some(f) = initial_frame {
                if f.t.iter().chain(&f.n).chain(&f.b).any(|x| !x.is_finite()) {
                    return Err(CliError::config("curve.initial_frame", "entries must be finite"));
                }
            }
            if let Some(p) = initial_point {
                if p.iter().any(|x| !x.is_finite()) {
                    return Err(CliError::config("curve.initial_point", "entries must be finite"));
                }
            }
        }
        Ok(())
    }

    pub fn curve_domain(&self) -> (f64, f64) {
        match &self.curve {
            CurveSpec::ReferenceHelix => HELIX_DOMAIN,
            CurveSpec::Prescribed { domain, .. } => (domain[0], domain[1]),
        }
    }

    pub fn curve_name(&self) -> &'static str {
        match self.curve {
            CurveSpec::ReferenceHelix => "reference-helix",
            CurveSpec::Prescribed { .. } => "prescribed",
        }
    }

    pub fn build_curve(&self) -> Result<ParamCurve, CliError> {
        match &self.curve {
            CurveSpec::ReferenceHelix => Ok(reference_helix(HELIX_DOMAIN)?),
            CurveSpec::Prescribed { kappa, tau, domain, initial_frame, initial_point } => {
                let frame = initial_frame
                    .as_ref()
                    .map(|f| Trihedron { t: vec3(f.t), n: vec3(f.n), b: vec3(f.b) })
                    .unwrap_or_else(Trihedron::canonical);
                let point = initial_point.map(vec3).unwrap_or_default();
                curve_from_curvature(kappa.to_fn(), tau.to_fn(), frame, point, (domain[0], domain[1]))
                    .map_err(|e| CliError::config("curve", e.to_string()))
            }
        }
    }

    pub fn resolved_directions(&self) -> Result<Vec<RulingDirection>, CliError> {
        self.directions.iter().enumerate().map(|(i, d)| d.resolve(i)).collect()
    }

    /// `s_range` with `[c - gap, c + gap]` removed.
    pub fn s_pieces(&self) -> Vec<(f64, f64)> {
        split_around(self.s_range, self.c, self.cusp_gap)
    }

    pub fn crosses_cusp(&self) -> bool {
        let [lo, hi] = self.s_range;
        self.c > lo - self.cusp_gap && self.c < hi + self.cusp_gap
    }
}

pub fn split_around(range: [f64; 2], c: f64, gap: f64) -> Vec<(f64, f64)> {
    let [lo, hi] = range;
    if c <= lo - gap || c >= hi + gap {
        return vec![(lo, hi)];
    }
    let mut out = Vec::new();
    if c - gap > lo {
        out.push((lo, c - gap));
    }
    if c + gap < hi {
        out.push((c + gap, hi));
    }
    out
}
