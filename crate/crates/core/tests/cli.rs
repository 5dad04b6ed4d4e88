//! Runs the binary on every shipped config and compares against the committed
//! outputs in `tests/golden`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use wcoprime::cli::config::parse_config;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn configs() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(root().join("configs"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "toml"))
        .collect();
    v.sort();
    v
}

fn command_of(path: &Path) -> String {
    let text = std::fs::read_to_string(path).unwrap();
    parse_config(&text).unwrap().command.to_string()
}

fn wcoprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcoprime"))
        .args(args)
        .env_remove("WCOPRIME_BUDGET")
        .output()
        .unwrap()
}

fn run_config(path: &Path) -> Output {
    wcoprime(&[&command_of(path), path.to_str().unwrap()])
}

fn golden_for(path: &Path) -> PathBuf {
    let stem = path.file_stem().unwrap().to_str().unwrap();
    let dir = root().join("tests/golden");
    let csv = dir.join(format!("{stem}.csv"));
    if csv.exists() {
        csv
    } else {
        dir.join(format!("{stem}.json"))
    }
}

#[test]
fn shipped_configs_match_golden_outputs() {
    let all = configs();
    assert!(all.len() >= 10);
    for path in all {
        let out = run_config(&path);
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        let want = std::fs::read(golden_for(&path)).unwrap();
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&want),
            "{}",
            path.display()
        );
    }
}

#[test]
fn runs_are_byte_identical() {
    for path in configs() {
        assert_eq!(run_config(&path).stdout, run_config(&path).stdout, "{}", path.display());
    }
}

#[test]
fn shipped_configs_round_trip() {
    for path in configs() {
        let cfg = parse_config(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(parse_config(&cfg.render()).unwrap(), cfg, "{}", path.display());
    }
}

#[test]
fn documented_examples() {
    let cfg = root().join("configs/zeta-value-e2.toml");
    let out = wcoprime(&["zeta-value", cfg.to_str().unwrap()]);
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with(",9/4"));

    let cfg = root().join("configs/count-elements-q2.toml");
    let out = wcoprime(&["count-elements", cfg.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "2,1*inf,1,2,1,9,9,true");

    let cfg = root().join("configs/verify-thm2-q2.toml");
    let out = wcoprime(&["verify-thm2", cfg.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let idx = reader.headers().unwrap().iter().position(|h| h == "error_num").unwrap();
    let errors: Vec<String> = reader.records().map(|r| r.unwrap()[idx].to_string()).collect();
    assert_eq!(errors, vec!["-1"; 10]);
}

#[test]
fn flags_override_config() {
    let cfg = root().join("configs/count-elements-q2.toml");
    let out = wcoprime(&["count-elements", cfg.to_str().unwrap(), "--N", "2", "--m", "1", "--w", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "2,2*inf,2,1,2,5,5,true");

    let out = wcoprime(&["count-elements", cfg.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["brute"], "9");
}

fn tmp_config(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wcoprime-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn error_record(out: &Output) -> serde_json::Value {
    let stderr = String::from_utf8_lossy(&out.stderr);
    serde_json::from_str(stderr.lines().last().unwrap()).unwrap()
}

#[test]
fn exit_codes() {
    let bad_key = tmp_config("bad.toml", "command = \"zeta-value\"\ncurve = \"rational\"\nq = 2\nbogus = 1\n[S]\ndegrees = [1]\n[params]\nt = 2\n");
    let out = wcoprime(&["zeta-value", bad_key.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_record(&out)["kind"], "config");

    let bad_curve = tmp_config(
        "curve.toml",
        "command = \"zeta-value\"\ncurve = { q = 2, genus = 1, weil_coeffs = [1, 0, 3] }\n[S]\ndegrees = [1]\n[params]\nt = 2\n",
    );
    let out = wcoprime(&["zeta-value", bad_curve.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(error_record(&out)["kind"], "invalid-curve");
    let bad_curve = tmp_config(
        "validate.toml",
        "command = \"curve-validate\"\ncurve = { q = 2, genus = 1, weil_coeffs = [1, 0, 3] }\n[S]\ndegrees = [1]\n",
    );
    let out = wcoprime(&["curve-validate", bad_curve.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid,false"));

    let cfg = root().join("configs/count-ideals-e2.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_wcoprime"))
        .args(["count-ideals", cfg.to_str().unwrap()])
        .env("WCOPRIME_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_record(&out)["kind"], "budget-exceeded");

    let out = wcoprime(&["zeta-value", "/nonexistent/config.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_path_is_written() {
    let cfg = root().join("configs/zeta-value-e2.toml");
    let dest = std::env::temp_dir().join(format!("wcoprime-out-{}.csv", std::process::id()));
    let out = wcoprime(&["zeta-value", cfg.to_str().unwrap(), "--output", dest.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&dest).unwrap();
    assert_eq!(written, std::fs::read(root().join("tests/golden/zeta-value-e2.csv")).unwrap());
    std::fs::remove_file(dest).ok();
}

#[test]
fn readme_commands() {
    let readme = std::fs::read_to_string(root().join("../../README.md")).unwrap();
    let mut seen = 0;
    for line in readme.lines().map(str::trim).filter(|l| l.starts_with("wcoprime ") && l.contains("configs/")) {
        let (cmd, note) = line.split_once('#').unwrap_or((line, ""));
        let parts: Vec<&str> = cmd.split_whitespace().collect();
        let cfg = root().join(parts[2]);
        let out = wcoprime(&[parts[1], cfg.to_str().unwrap()]);
        assert!(out.status.success(), "{line}");
        let text = String::from_utf8(out.stdout).unwrap();
        let want = note
            .split_whitespace()
            .map(|t| t.trim_end_matches(','))
            .find(|t| t.starts_with(|c: char| c.is_ascii_digit() || c == '-'));
        if let Some(want) = want {
            assert!(text.split([',', '\n']).any(|cell| cell == want), "{line}: {want} not in output");
        }
        seen += 1;
    }
    assert!(seen >= 5);
}
