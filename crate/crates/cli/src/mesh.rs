//! Grid sampling of ruled surfaces and OBJ/CSV export.

use std::fmt::Write as _;
use std::path::Path;

use minkruled_core::{Degeneracy, TrajectoryRuledSurface};

use crate::error::CliError;

/// Row-major `ns x nv` grid of surface points.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceMesh {
    pub ns: usize,
    pub nv: usize,
    /// `(s, v)` of each vertex.
    pub params: Vec<(f64, f64)>,
    pub vertices: Vec<[f64; 3]>,
    /// Closed-form drall of the vertex's row; 0 on cylindrical rows.
    pub drall: Vec<f64>,
}

impl SurfaceMesh {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// 1-based quads `(i,j) (i+1,j) (i+1,j+1) (i,j+1)`.
    pub fn faces(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::with_capacity((self.ns - 1) * (self.nv - 1));
        for i in 0..self.ns - 1 {
            for j in 0..self.nv - 1 {
                let a = i * self.nv + j + 1;
                out.push([a, a + self.nv, a + self.nv + 1, a + 1]);
            }
        }
        out
    }

    /// Concatenate meshes with the same `nv`, e.g. the pieces on either side of a cusp.
    /// Faces are not built across piece boundaries.
    pub fn pieces_to_obj(pieces: &[SurfaceMesh]) -> String {
        let mut out = String::new();
        for m in pieces {
            for v in &m.vertices {
                let _ = writeln!(out, "v {} {} {}", fmt_coord(v[0]), fmt_coord(v[1]), fmt_coord(v[2]));
            }
        }
        let mut base = 0;
        for m in pieces {
            for f in m.faces() {
                let _ = writeln!(out, "f {} {} {} {}", f[0] + base, f[1] + base, f[2] + base, f[3] + base);
            }
            base += m.vertex_count();
        }
        out
    }

    pub fn to_obj(&self) -> String {
        Self::pieces_to_obj(std::slice::from_ref(self))
    }

    pub fn pieces_to_csv(pieces: &[SurfaceMesh]) -> String {
        let mut out = String::from("s,v,x,y,z,drall\n");
        for m in pieces {
            for ((p, v), d) in m.params.iter().zip(&m.vertices).zip(&m.drall) {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    fmt_coord(p.0),
                    fmt_coord(p.1),
                    fmt_coord(v[0]),
                    fmt_coord(v[1]),
                    fmt_coord(v[2]),
                    fmt_scalar(*d)
                );
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        Self::pieces_to_csv(std::slice::from_ref(self))
    }
}

/// Nine fractional digits, never `-0`.
pub fn fmt_coord(x: f64) -> String {
    let s = format!("{:.9}", x + 0.0);
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn fmt_scalar(x: f64) -> String {
    if x.is_finite() {
        fmt_coord(x)
    } else {
        format!("{x}")
    }
}

fn lerp((lo, hi): (f64, f64), i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64 / (n - 1) as f64)
    }
}

pub fn sample_grid(
    surf: &TrajectoryRuledSurface,
    s_range: (f64, f64),
    v_range: (f64, f64),
    ns: usize,
    nv: usize,
) -> Result<SurfaceMesh, CliError> {
    if ns < 2 || nv < 2 {
        return Err(CliError::config("grid", "ns and nv must both be at least 2"));
    }
    let mut mesh = SurfaceMesh {
        ns,
        nv,
        params: Vec::with_capacity(ns * nv),
        vertices: Vec::with_capacity(ns * nv),
        drall: Vec::with_capacity(ns * nv),
    };
    for i in 0..ns {
        let s = lerp(s_range, i, ns);
        let fail = |j, source| CliError::Sampling { i, j, s, source };
        let d = surf.drall_closed(s).map_err(|e| fail(0, e))?;
        let dv = if d.degeneracy == Degeneracy::Cylindrical { 0.0 } else { d.value };
        for j in 0..nv {
            let v = lerp(v_range, j, nv);
            let p = surf.point(s, v).map_err(|e| fail(j, e))?;
            mesh.params.push((s, v));
            mesh.vertices.push(p.to_array());
            mesh.drall.push(dv);
        }
    }
    Ok(mesh)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if path.as_os_str().is_empty() {
        return Err(CliError::Io("empty output path".to_string()));
    }
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_are_fixed_width_and_unsigned_at_zero() {
        assert_eq!(fmt_coord(-0.0), "0.000000000");
        assert_eq!(fmt_coord(-1e-12), "0.000000000");
        assert_eq!(fmt_coord(1.5), "1.500000000");
        assert_eq!(fmt_coord(-2.0 / 3.0), "-0.666666667");
    }

    #[test]
    fn face_indices_follow_row_major_layout() {
        let m =
            SurfaceMesh { ns: 3, nv: 2, params: vec![(0.0, 0.0); 6], vertices: vec![[0.0; 3]; 6], drall: vec![0.0; 6] };
        assert_eq!(m.faces(), vec![[1, 3, 4, 2], [3, 5, 6, 4]]);
        let obj = SurfaceMesh::pieces_to_obj(&[m.clone(), m]);
        assert!(obj.lines().any(|l| l == "f 7 9 10 8"));
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 12);
    }

    #[test]
    fn endpoints_are_exact() {
        assert_eq!(lerp((0.1, 0.3), 0, 7), 0.1);
        assert_eq!(lerp((0.1, 0.3), 6, 7), 0.3);
    }
}
