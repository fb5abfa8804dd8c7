use std::path::PathBuf;
use std::process::Command;

use minkruled::mesh::write_file;
use minkruled::{run_report, run_verify, sample_grid, CliError, SceneConfig, SurfaceMesh, Verdict};
use minkruled_core::{reference_helix, DevelopabilityReason, InvoluteCurve, RulingDirection, TrajectoryRuledSurface};

const S3: f64 = 1.732_050_807_568_877_2;

const HELIX_SCENE: &str = r#"{
    "curve": {"kind": "paper-helix"},
    "c": 1.0,
    "directions": ["t*", "n*", "b*"],
    "s_range": [0.0, 3.141592653589793],
    "v_range": [-2.0, 2.0],
    "grid": [12, 5]
}"#;

const TILTED_TORSION: &str = r#"{
    "curve": {"kind": "prescribed", "kappa": {"poly": [1.0]}, "tau": {"poly": [0.0, 0.25]}, "domain": [0.0, 3.0]},
    "c": 4.0,
    "directions": ["n*"],
    "s_range": [0.2, 2.8],
    "v_range": [-1.0, 1.0],
    "grid": [4, 3]
}"#;

fn helix_surface(dir: RulingDirection, domain: (f64, f64)) -> TrajectoryRuledSurface {
    TrajectoryRuledSurface::new(InvoluteCurve::new(reference_helix((-1.0, 5.0)).unwrap(), 1.0, domain).unwrap(), dir)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minkruled-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn parse_obj(text: &str) -> (Vec<[f64; 3]>, Vec<Vec<usize>>) {
    let (mut v, mut f) = (Vec::new(), Vec::new());
    for line in text.lines() {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("v") => {
                let c: Vec<f64> = it.map(|x| x.parse().unwrap()).collect();
                v.push([c[0], c[1], c[2]]);
            }
            Some("f") => f.push(it.map(|x| x.parse().unwrap()).collect()),
            _ => {}
        }
    }
    (v, f)
}

#[test]
fn two_by_two_grid_is_exact() {
    let surf = helix_surface(RulingDirection::b_star(), (0.0, 0.9));
    let mesh = sample_grid(&surf, (0.0, 0.9), (-2.0, 2.0), 2, 2).unwrap();
    assert_eq!(mesh.vertex_count(), 4);
    assert_eq!(mesh.faces().len(), 1);
    for (p, v) in mesh.params.iter().zip(&mesh.vertices) {
        assert_eq!(surf.point(p.0, p.1).unwrap().to_array(), *v);
    }
    let (v, f) = parse_obj(&mesh.to_obj());
    assert_eq!((v.len(), f.len()), (4, 1));
    assert_eq!(f[0], vec![1, 3, 4, 2]);
}

#[test]
fn tangent_ruling_grid_matches_closed_form() {
    for piece in [(0.0, 0.99), (1.01, std::f64::consts::PI)] {
        let surf = helix_surface(RulingDirection::t_star(), piece);
        let mesh = sample_grid(&surf, piece, (-2.0, 2.0), 30, 9).unwrap();
        for (&(s, v), p) in mesh.params.iter().zip(&mesh.vertices) {
            let (ch, sh) = ((s / S3).cosh(), (s / S3).sinh());
            let off = 1.0 - s;
            let want = [2.0 * sh + off * 2.0 / S3 * ch + v * sh, 2.0 * ch + off * 2.0 / S3 * sh + v * ch, 1.0 / S3];
            for a in 0..3 {
                assert!((p[a] - want[a]).abs() <= 1e-12, "s = {s}, v = {v}");
            }
        }
        assert!(mesh.drall.iter().all(|&d| d == 0.0));
    }
}

#[test]
fn obj_round_trip_and_csv_layout() {
    let surf = helix_surface(RulingDirection::n_star(), (0.0, 0.99));
    let mesh = sample_grid(&surf, (0.0, 0.99), (-2.0, 2.0), 7, 4).unwrap();
    let (v, f) = parse_obj(&mesh.to_obj());
    assert_eq!(v.len(), 28);
    assert_eq!(f.len(), 18);
    for (a, b) in v.iter().zip(&mesh.vertices) {
        for k in 0..3 {
            assert!((a[k] - b[k]).abs() <= 1e-9);
        }
    }
    let csv = mesh.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,v,x,y,z,drall"));
    assert_eq!(lines.count(), 28);
    assert_eq!(SurfaceMesh::pieces_to_csv(&[mesh.clone(), mesh]).lines().count(), 57);
}

#[test]
fn empty_path_is_an_io_failure() {
    assert!(matches!(write_file(&PathBuf::new(), "v 0 0 0\n"), Err(CliError::Io(_))));
    let dir = scratch("io");
    assert!(matches!(write_file(&dir.join("missing").join("x.obj"), ""), Err(CliError::Io(_))));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn helix_report_verdicts() {
    let cfg = SceneConfig::from_json(HELIX_SCENE).unwrap();
    let rep = run_report(&cfg).unwrap();
    let verdicts: Vec<_> = rep.directions.iter().map(|d| d.verdict).collect();
    assert_eq!(
        verdicts,
        vec![
            Verdict::Developable(DevelopabilityReason::TangentRuling),
            Verdict::Developable(DevelopabilityReason::HelixBase),
            Verdict::Developable(DevelopabilityReason::CylindricalRuling),
        ]
    );
    assert!(rep.warnings.is_empty());
    assert!(rep.text.contains("0.666666667"));
    assert!(rep.text.contains("0.333333333"));
    assert!(rep.text.contains("general helix"));
    assert!(rep.text.contains("cusp"));
    assert_eq!(run_report(&cfg).unwrap().text, rep.text);
}

#[test]
fn linear_torsion_normal_ruling_is_not_developable() {
    let cfg = SceneConfig::from_json(TILTED_TORSION).unwrap();
    let rep = run_report(&cfg).unwrap();
    assert_eq!(rep.directions[0].verdict, Verdict::NotDevelopable);
    assert!(rep.text.contains("not a general helix"));
    let out = run_verify(&cfg, 50, 3).unwrap();
    assert_eq!(out.failures, 0);
    assert_eq!(run_verify(&cfg, 50, 3).unwrap(), out);
}

#[test]
fn binary_exit_codes_and_outputs() {
    let bin = env!("CARGO_BIN_EXE_minkruled");
    let dir = scratch("bin");
    let cfg_path = dir.join("scene.json");
    let with_outputs = HELIX_SCENE.replace(
        "\"grid\": [12, 5]",
        &format!("\"grid\": [12, 5], \"outputs\": [{{\"format\": \"obj\", \"path\": \"{}/{{dir}}.obj\"}}, {{\"format\": \"csv\", \"path\": \"{}/mesh.csv\"}}]", dir.display(), dir.display()),
    );
    std::fs::write(&cfg_path, with_outputs).unwrap();

    let run = |args: &[&str], seed: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(args).env_remove("MINKRULED_SEED");
        if let Some(s) = seed {
            c.env("MINKRULED_SEED", s);
        }
        c.output().unwrap()
    };
    let cfg = cfg_path.to_str().unwrap();

    let r1 = run(&["report", cfg], None);
    assert_eq!(r1.status.code(), Some(0));
    assert_eq!(run(&["report", cfg], None).stdout, r1.stdout);

    let m = run(&["mesh", cfg], None);
    assert_eq!(m.status.code(), Some(0));
    let first = std::fs::read(dir.join("n_star.obj")).unwrap();
    assert!(dir.join("mesh_b_star.csv").exists());
    run(&["mesh", cfg], None);
    assert_eq!(std::fs::read(dir.join("n_star.obj")).unwrap(), first);

    let v1 = run(&["verify", cfg, "--trials", "40", "--seed", "1"], Some("9"));
    let v2 = run(&["verify", cfg, "--trials", "40", "--seed", "9"], None);
    assert_eq!(v1.status.code(), Some(0));
    assert_eq!(v1.stdout, v2.stdout);

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ \"c\": 1.0,\n \"grid\": [2 2] }").unwrap();
    let b = run(&["report", bad.to_str().unwrap()], None);
    assert_eq!(b.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&b.stderr).contains("line 2"));
    assert_eq!(run(&["report", dir.join("absent.json").to_str().unwrap()], None).status.code(), Some(2));

    let null = dir.join("null.json");
    std::fs::write(
        &null,
        r#"{"curve": {"kind": "prescribed", "kappa": 1.0, "tau": {"poly": [0.0, 1.0]}, "domain": [0.0, 2.0]},
            "c": 3.0, "directions": ["n*"], "s_range": [0.0, 2.0], "v_range": [-1.0, 1.0], "grid": [3, 3],
            "report_samples": 3}"#,
    )
    .unwrap();
    let n = run(&["report", null.to_str().unwrap()], None);
    assert_eq!(n.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&n.stdout).contains("lightlike"));

    let _ = std::fs::remove_dir_all(dir);
}
