use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn weylkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = weylkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("weylkit-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn normal_forms() {
    assert_eq!(stdout(&["nf", "d1*x1"]), "x1*d1 + z^2\n");
    assert_eq!(stdout(&["nf", "--algebra", "A", "d1*x1"]), "1 + x1*d1\n");
    assert_eq!(stdout(&["nf", "--n", "2", "d2*x2 - x2*d2"]), "z^2\n");
    assert_eq!(stdout(&["nf", "--algebra", "C", "d1*x1 - x1*d1"]), "0\n");
    assert_eq!(stdout(&["mul", "d1", "x1^3"]), "x1^3*d1 + 3*z^2*x1^2\n");
}

#[test]
fn json_normal_form_decodes() {
    let text = stdout(&["nf", "--json", "d1*x1"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["algebra"], "B");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let back = weylkit::expr::decode_json(text.trim()).unwrap();
    let weylkit::expr::Decoded::Pbw(e) = back else { panic!("expected a PBW element") };
    assert_eq!(e.len(), 2);
}

#[test]
fn shriek_dimensions_and_nakayama() {
    assert_eq!(stdout(&["dims", "--n", "1", "--algebra", "B!"]), "1 3 3 1\n");
    assert_eq!(stdout(&["dims", "--n", "3", "--algebra", "B!"]), "1 7 21 35 35 21 7 1\n");
    let out = stdout(&["nakayama", "--n", "1"]);
    assert!(out.contains("sigma(z) = z"), "{out}");
    assert!(out.contains("k = 1/1"), "{out}");
}

#[test]
fn verify_report_shape() {
    let v: Value = serde_json::from_str(&stdout(&["verify", "shriek-dims", "--n", "2", "--json"])).unwrap();
    assert_eq!(v["suiteName"], "shriek-dims");
    assert_eq!(v["nRange"], serde_json::json!([2]));
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass");
        assert!(check["claimId"].is_string() && check["paperAnchor"].is_string());
        assert!(check.get("elapsedMillis").is_none());
    }
    let timed: Value =
        serde_json::from_str(&stdout(&["verify", "shriek-dims", "--n", "1", "--json", "--timing"])).unwrap();
    assert!(timed["checks"][0]["elapsedMillis"].is_u64());
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "localization", "--n", "2", "--seed", "7", "--budget", "20", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nope"][..],
        &["verify", "nakayama", "--n", "3"],
        &["nf", "x3"],
        &["nf", "--algebra", "A", "z"],
        &["nf", "x1 +"],
        &["bogus"],
    ] {
        let out = weylkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn golden_bless_then_compare() {
    let dir = scratch("golden");
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_weylkit"))
            .args(["verify", "nakayama", "--n", "1"])
            .args(extra)
            .env(weylkit::verify::GOLDEN_ENV, &dir)
            .output()
            .unwrap()
    };
    // nothing to compare against yet
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["--bless"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(0));

    // a tampered golden value is caught
    let path = weylkit::verify::golden_path(&dir, 1);
    let text = std::fs::read_to_string(&path).unwrap().replace("\"k\": \"1/1\"", "\"k\": \"2/1\"");
    std::fs::write(&path, text).unwrap();
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL nakayama.golden"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn checked_in_golden_matches() {
    for n in 1..=2 {
        let path = weylkit::verify::golden_path(&weylkit::verify::golden_dir(), n);
        let stored = weylkit::verify::GoldenNakayama::load(&path).unwrap().expect("golden file present");
        assert_eq!(stored, weylkit::verify::GoldenNakayama::compute(n).unwrap());
    }
}
