use std::path::PathBuf;

use twistforge::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use twistforge::io::emit_matrix;
use twistforge::linalg::SparseMat;

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(rel).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("twistforge").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_ybe_passes() {
    let (code, out, _) = cli(&["verify", "--config", &data("configs/so5_full.json"), "--suite", "ybe"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.starts_with("PASS"));
}

#[test]
fn verify_ybe_negative_control_fails() {
    let e = SparseMat::unit(5, 5, 0, 1);
    let r = SparseMat::identity(25).add(&e.kron(&e.transpose())).unwrap();
    let dir = std::env::temp_dir().join(format!("twistforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_r.json");
    std::fs::write(&path, emit_matrix(&r)).unwrap();
    let (code, out, _) = cli(&["verify", "--matrix", path.to_str().unwrap(), "--suite", "ybe"]);
    assert_eq!(code, EXIT_FAIL, "{out}");
    assert!(out.starts_with("FAIL"));
}

#[test]
fn usage_and_config_errors() {
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--suite", "ybe"]).0, EXIT_USAGE);
    assert_eq!(cli(&["chain", "build", "--config", &data("configs/so5_too_many_links.json")]).0, EXIT_USAGE);
    assert_eq!(cli(&["chain", "build", "--config", "/nonexistent.json"]).0, EXIT_USAGE);
    assert_eq!(cli(&["yangian", "--config", &data("configs/so5_full.json"), "--u", "-3/2", "--v", "1"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_PASS);
}

#[test]
fn algebra_info_reports_counts() {
    let (code, out, _) = cli(&["algebra", "info", "--series", "B", "--rank", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("algebra so(9)"));
    assert!(out.contains("p_max 4"));
    assert!(out.contains("borel dim 20"));
}

#[test]
fn outputs_are_deterministic() {
    let cfg = data("configs/so5_full.json");
    for args in [
        vec!["rmatrix", "--config", &cfg, "--format", "json"],
        vec!["rmatrix", "--config", &cfg, "--format", "text"],
        vec!["verify", "--config", &cfg, "--suite", "all", "--json"],
        vec!["chain", "build", "--config", &cfg],
    ] {
        let a = cli(&args);
        let b = cli(&args);
        assert_eq!(a, b);
        assert_eq!(a.0, EXIT_PASS);
    }
}

#[test]
fn rmatrix_json_round_trips() {
    let (_, out, _) = cli(&["rmatrix", "--config", &data("configs/so5_full.json"), "--format", "json"]);
    let m = twistforge::io::parse_matrix(out.trim()).unwrap();
    assert_eq!(emit_matrix(&m), out.trim());
}

#[test]
fn golden_compare_exit_codes() {
    let cfg = data("configs/so5_full.json");
    let golden = data("golden/so5_full_chain_R.json");
    let erratum = data("golden/so5_full_chain_R.erratum.json");
    let (code, out, _) = cli(&["golden", "compare", "--config", &cfg, "--golden", &golden]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.starts_with("mismatches 20"));
    let (code, out, _) = cli(&["golden", "compare", "--config", &cfg, "--golden", &golden, "--erratum", &erratum]);
    assert_eq!(code, EXIT_PASS, "{out}");
}

#[test]
fn yangian_command() {
    let cfg = data("configs/so5_full.json");
    assert_eq!(cli(&["yangian", "--config", &cfg, "--u", "1/2", "--v", "1/3"]).0, EXIT_PASS);
    assert_eq!(cli(&["yangian", "--config", &cfg, "--u", "2", "--v", "1", "--untwisted"]).0, EXIT_PASS);
}
