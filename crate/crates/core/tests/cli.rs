use std::process::Command;

use dnls::experiments::{read_manifest, MANIFEST};

fn bench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dnls-bench"))
}

#[test]
fn convergence_subcommand_writes_results() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench()
        .args(["convergence", "--n-points", "32", "--tau", "2^-3:2^-5", "--tau-ref", "2^-7", "--t-end", "0.25"])
        .args(["--method", "symmetric", "--seed", "9", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary["runs"][0]["slope"].is_f64());
    let manifest = read_manifest(dir.path().join(MANIFEST)).unwrap();
    assert_eq!(manifest.config.seed, 9);
    assert_eq!(manifest.config.tau_ladder, vec![0.125, 0.0625, 0.03125]);
    assert_eq!(manifest.config.method.name(), "symmetric");
}

#[test]
fn repeated_tau_and_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench()
        .args(["convergence", "--n-points", "16", "--tau", "0.125", "--tau", "2^-4", "--tau", "2^-5"])
        .args(["--tau-ref", "2^-7", "--t-end", "0.25", "--seeds", "2", "--seed", "4", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for seed in [4, 5] {
        assert!(dir.path().join(format!("seed-{seed}")).join(MANIFEST).exists());
    }
}

#[test]
fn conservation_and_run_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["conservation", "run"] {
        let out = bench()
            .args([cmd, "--n-points", "16", "--tau", "2^-5", "--t-end", "0.5", "--stride", "4", "--dealias", "--out"])
            .arg(dir.path().join(cmd))
            .output()
            .unwrap();
        assert!(out.status.success(), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(summary["runs"][0]["max_rel_mass_err"].as_f64().unwrap() < 1e-3);
        assert!(dir.path().join(cmd).join("conservation.csv").exists());
    }
}

#[test]
fn failures_report_json_and_nonzero_status() {
    let out = bench().args(["run", "--tau", "0.3", "--out", "unused"]).output().unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "step_count");
    assert!(err["message"].as_str().unwrap().contains("0.3"));

    let out = bench().args(["convergence", "--n-points", "15"]).output().unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "grid_size");
}
