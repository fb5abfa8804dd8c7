//! Scene configuration, reports, mesh export and oracle checks for the `minkruled` tool.

// `!(x >= lo)` comparisons are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod mesh;
pub mod random;
pub mod report;
pub mod verify;

use std::path::{Path, PathBuf};

use minkruled_core::{InvoluteCurve, TrajectoryRuledSurface};

pub use config::{MeshFormat, SceneConfig};
pub use error::CliError;
pub use mesh::{sample_grid, SurfaceMesh};
pub use report::{run_report, Report, Verdict};
pub use verify::{run_verify, VerifyOutcome};

/// One mesh per s-piece for a single direction.
#[derive(Debug, Clone)]
pub struct DirectionMesh {
    pub label: String,
    pub pieces: Vec<SurfaceMesh>,
}

/// Sample every configured direction on every s-piece.
pub fn build_meshes(cfg: &SceneConfig) -> Result<Vec<DirectionMesh>, CliError> {
    let curve = cfg.build_curve()?;
    let dirs = cfg.resolved_directions()?;
    let [ns, nv] = cfg.grid;
    let v_range = (cfg.v_range[0], cfg.v_range[1]);
    let mut out = Vec::with_capacity(dirs.len());
    for (idx, dir) in dirs.iter().enumerate() {
        let mut pieces = Vec::new();
        for piece in cfg.s_pieces() {
            let inv = InvoluteCurve::new(curve.clone(), cfg.c, piece)?;
            let surf = TrajectoryRuledSurface::new(inv, *dir);
            pieces.push(sample_grid(&surf, piece, v_range, ns, nv)?);
        }
        out.push(DirectionMesh { label: config::direction_label(dir, idx), pieces });
    }
    Ok(out)
}

/// Output path for one direction: `{dir}` is substituted, otherwise the label is
/// appended to the stem when several directions share the path.
pub fn output_path(template: &str, label: &str, several: bool) -> PathBuf {
    if template.contains("{dir}") {
        return PathBuf::from(template.replace("{dir}", label));
    }
    let p = Path::new(template);
    if !several || template.is_empty() {
        return p.to_path_buf();
    }
    let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match p.extension() {
        Some(ext) => format!("{stem}_{label}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{label}"),
    };
    p.with_file_name(name)
}

/// Write every configured output; returns the paths written.
pub fn export_all(cfg: &SceneConfig, meshes: &[DirectionMesh]) -> Result<Vec<PathBuf>, CliError> {
    let mut written = Vec::new();
    for output in &cfg.outputs {
        for m in meshes {
            let path = output_path(&output.path, &m.label, meshes.len() > 1);
            let body = match output.format {
                MeshFormat::Obj => SurfaceMesh::pieces_to_obj(&m.pieces),
                MeshFormat::Csv => SurfaceMesh::pieces_to_csv(&m.pieces),
            };
            mesh::write_file(&path, &body)?;
            written.push(path);
        }
    }
    Ok(written)
}
