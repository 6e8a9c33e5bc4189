//! End-to-end checks of the binary: exit codes, file outputs,
//! determinism, and the diagnostics schema.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_slitmap"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("slitmap-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

// small orders keep the runs quick; accuracy is not under test here
fn fast_args(cmd: &mut Command) -> &mut Command {
    cmd.args(["--quad-order", "24", "--points", "32", "--tol", "1e-4"])
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn validation_failure_exits_2_and_names_the_case() {
    let out = run(fast_args(bin().args(["--kappa", "1.0"])));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("kappa singular"), "{err}");

    let out = run(fast_args(bin().args(["--tau1", "-2", "--tau1-inf", "-2"])));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("no solution exists"), "{err}");
}

#[test]
fn config_file_with_flag_overrides() {
    let dir = tmpdir("config");
    let cfg = dir.join("run.json");
    std::fs::write(
        &cfg,
        r#"{"m": 4.0, "kappa": 0.5, "tau1_hat": -1.5, "tau1_inf_hat": -2.0,
           "zeta0": [0.5, 0.75], "quad_order": 24, "n_points": 32, "tol": 1e-4}"#,
    )
    .unwrap();
    let diag = dir.join("diag.json");
    let out = run(bin()
        .args(["--config", cfg.to_str().unwrap()])
        .args(["--out-diag", diag.to_str().unwrap()]));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&diag).unwrap()).unwrap();
    assert_eq!(v["params"]["m"], 4.0);
    // a bad config field is a usage error
    std::fs::write(&cfg, r#"{"kapa": 0.5}"#).unwrap();
    let out = run(bin().args(["--config", cfg.to_str().unwrap()]));
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn diagnostics_schema_is_complete() {
    let dir = tmpdir("schema");
    let diag = dir.join("d.json");
    let out = run(fast_args(bin().args(["--tau1", "-1.5", "--out-diag", diag.to_str().unwrap()])));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&diag).unwrap()).unwrap();
    for key in ["params", "derived", "residuals", "pass"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["k", "K", "b1", "zeta1", "sheet1", "n_a", "n_b", "X_inf", "M"] {
        assert!(v["derived"].get(key).is_some(), "missing derived.{key}");
    }
    let residuals = v["residuals"].as_object().unwrap();
    for slot in [
        "loop_integral_l0",
        "loop_integral_l1",
        "period_b",
        "removability_bracket",
        "jacobi_defect",
        "integer_snap",
        "factor_ratio_l0",
        "factor_ratio_l1",
        "phi1_jump_l0",
        "phi1_jump_l1",
        "phi2_sum_l0",
        "phi2_jump_l1",
        "residue_xi0",
        "q1_cancellation",
        "infinity_error_1e4",
        "infinity_error_1e6",
        "infinity_decay_factor",
        "im_omega_l0",
        "closure",
        "order_doubling_omega",
        "closure_halving",
        "b0_invariance",
        "n0star_translation",
        "n1_scaling",
        "aux_point_independence",
        "boundary_re",
        "boundary_im",
    ] {
        assert!(residuals.contains_key(slot), "missing residual slot {slot}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_writes_one_file_per_leg_and_a_combined_svg() {
    let dir = tmpdir("sweep");
    let contour = dir.join("contour.csv");
    let svg = dir.join("plot.svg");
    let out = run(fast_args(bin().args([
        "--tau1",
        "-1.5",
        "--sweep",
        "m=1.6,2,3",
        "--out-contour",
        contour.to_str().unwrap(),
        "--out-svg",
        svg.to_str().unwrap(),
    ])));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for leg in ["contour-m1.6.csv", "contour-m2.csv", "contour-m3.csv"] {
        let p = dir.join(leg);
        assert!(p.exists(), "missing {leg}");
        let text = std::fs::read_to_string(&p).unwrap();
        assert!(text.starts_with("xi,side,x,y\n"));
        assert_eq!(text.lines().count(), 1 + 2 * 32);
    }
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg_text.matches("<polyline").count(), 3);
    assert_eq!(svg_text.matches("<line").count(), 1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("3/3 runs pass"), "{stdout}");
    // invalid sweep values fail validation up front
    let out = run(fast_args(bin().args(["--sweep", "m=1.6,0.5"])));
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn outputs_are_deterministic() {
    let dir = tmpdir("determinism");
    let read = |tag: &str| {
        let contour = dir.join(format!("c-{tag}.csv"));
        let diag = dir.join(format!("d-{tag}.json"));
        let out = run(fast_args(bin().args([
            "--tau1",
            "-1.5",
            "--out-contour",
            contour.to_str().unwrap(),
            "--out-diag",
            diag.to_str().unwrap(),
        ])));
        assert_eq!(out.status.code(), Some(0));
        (
            std::fs::read(&contour).unwrap(),
            std::fs::read(&diag).unwrap(),
        )
    };
    let (c1, d1) = read("a");
    let (c2, d2) = read("b");
    assert_eq!(c1, c2, "contour CSV differs between runs");
    assert_eq!(d1, d2, "diagnostics JSON differs between runs");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn io_failure_exits_4() {
    let out = run(fast_args(bin().args([
        "--tau1",
        "-1.5",
        "--out-contour",
        "/nonexistent-dir-slitmap/contour.csv",
    ])));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn failed_diagnostics_exit_3() {
    // an unreachable tolerance turns residual slots red
    let out = run(bin().args([
        "--tau1",
        "-1.5",
        "--quad-order",
        "24",
        "--points",
        "32",
        "--tol",
        "1e-30",
        "--quiet",
    ]));
    assert_eq!(out.status.code(), Some(3));
}

