use std::process::{Command, Output};

use cyclic_plane::classify::{classify, RecordStatus, VerifyOptions};
use cyclic_plane::normal_form::{build_form, NormalForm};
use cyclic_plane::types::{enumerate_candidates, CyclicType};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic-plane"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enum_latex_quartics() {
    let o = run(&["enum", "--degree", "4", "--format", "latex"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().filter(|l| l.starts_with('$')).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0], "$12,(3,4)$ & $X^4+Y^4+\\alpha XZ^3$ \\\\");
    assert!(o.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enum", "--degree", "6", "--format", "json", "--seed", "7"][..],
        &["special", "--degree", "4"],
        &[
            "verify", "--degree", "5", "--m", "8", "--a", "1", "--b", "4", "--seed", "3",
        ],
        &["golden-check", "--degree", "8"],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn form_json_round_trips() {
    let o = run(&[
        "form", "--degree", "6", "--m", "30", "--a", "5", "--b", "6", "--format", "json",
    ]);
    assert!(o.status.success());
    let forms: Vec<NormalForm> = serde_json::from_slice(&o.stdout).unwrap();
    let ty = CyclicType::new(30, 5, 6).unwrap();
    let expected: Vec<NormalForm> = enumerate_candidates(6)
        .unwrap()
        .iter()
        .filter(|c| c.ty == ty)
        .map(|c| build_form(c).unwrap())
        .collect();
    assert_eq!(forms, expected);
    let again = serde_json::to_string_pretty(&forms).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn special_json_orders() {
    let o = run(&["special", "--degree", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let orders: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["group"]["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![20, 16, 30, 39]);
    for r in v.as_array().unwrap() {
        assert_eq!(r["check"]["closure_order"], r["group"]["order"]);
        assert!(r["curve"]["fixed"].is_array());
    }
}

#[test]
fn large_records_and_empty_loci() {
    let o = run(&["large", "--degree", "6", "--ell", "2", "--kind", "d-2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("SmallGroup(16,8)"));
    let o = run(&[
        "large", "--degree", "7", "--ell", "3", "--kind", "d-2", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["empty_locus"].as_str().unwrap().contains("mod 3"));
    let o = run(&["large", "--degree", "4", "--ell", "2", "--kind", "d"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree at least 5"));
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["golden-check", "--degree", "7"]).status.code(), Some(0));
    assert_eq!(
        run(&["verify", "--degree", "4", "--m", "12", "--a", "3", "--b", "4"])
            .status
            .code(),
        Some(0)
    );
    // a reducible class has no smooth member
    let recs = classify(5, &VerifyOptions::default()).unwrap();
    let red = recs.iter().find(|r| r.status == RecordStatus::Reducible).unwrap();
    let t = red.orbit.form.ty;
    let (m, a, b) = (t.m().to_string(), t.a().to_string(), t.b().to_string());
    let o = run(&["verify", "--degree", "5", "--m", &m, "--a", &a, "--b", &b]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    // usage errors
    let o = run(&["enum"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty() && !o.stderr.is_empty());
    assert_eq!(run(&["enum", "--degree", "3"]).status.code(), Some(2));
    assert_eq!(run(&["golden-check", "--degree", "10"]).status.code(), Some(2));
    assert_eq!(
        run(&["form", "--degree", "4", "--m", "5", "--a", "1", "--b", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enum", "--degree", "4", "--format", "xml"]).status.code(),
        Some(2)
    );
}

#[test]
fn enum_json_lists_excluded_classes() {
    let o = run(&["enum", "--degree", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let statuses: Vec<&str> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["status"].as_str().unwrap())
        .collect();
    assert_eq!(statuses.iter().filter(|s| **s == "tabulated").count(), 17);
    assert_eq!(statuses.iter().filter(|s| **s == "untabulated-order").count(), 3);
}
