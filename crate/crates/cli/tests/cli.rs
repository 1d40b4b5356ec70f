use std::io::Write;
use std::process::{Command, Output};

fn jlring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jlring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn scenario_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn fait_matches_golden_text_and_json() {
    let text = jlring(&["fait"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text), golden("fait.txt"));
    let json = jlring(&["fait", "--json"]);
    assert_eq!(stdout(&json), golden("fait.json"));
}

#[test]
fn weyl_and_comul_match_golden() {
    let o = jlring(&["check", "weyl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("check_weyl.txt"));
    assert!(stdout(&o).contains("PASS |W((2,2),(2,2))_2| = 2"));
    let o = jlring(&["comul", "Std(rho[0..1],rho[3..3])"]);
    assert_eq!(stdout(&o), golden("comul.txt"));
}

#[test]
fn documented_examples() {
    let o = jlring(&["dual", "Std(rho[0..1])"]);
    assert_eq!(stdout(&o), "Std(rho[0..1]) - Std(rho[0..0],rho[1..1])\n");
    let o = jlring(&["lj", "Std(rho[0..0],rho[1..3])"]);
    assert_eq!(stdout(&o), "0\n");
    let o = jlring(&[
        "order",
        "Std(rho[0..9],rho[1..6],rho[3..8],rho[4..5])",
        "Std(rho[0..5],rho[1..8],rho[3..6],rho[4..9])",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("true\n"));
    assert_eq!(out.lines().count(), 5);
    let o = jlring(&["jl", "Std(rho'{0;3})"]);
    assert_eq!(stdout(&o), "Std(rho[0..5])\n");
}

#[test]
fn basis_changes() {
    let o = jlring(&["decompose", "Std(rho[0..0],rho[1..1])"]);
    assert_eq!(stdout(&o), "Irr(rho[0..1]) + Irr(rho[0..0],rho[1..1])\n");
    let o = jlring(&["express", "Irr(rho[0..0],rho[1..1])"]);
    assert_eq!(stdout(&o), "-Std(rho[0..1]) + Std(rho[0..0],rho[1..1])\n");
    let o = jlring(&["dual", "Irr(rho[0..0],rho[1..1])"]);
    assert_eq!(stdout(&o), "-Irr(rho[0..1])\n");
    let o = jlring(&["mul", "Std(rho[0..0])", "Std(rho[1..1]) - Std(rho[5..5])"]);
    assert_eq!(
        stdout(&o),
        "Std(rho[0..0],rho[1..1]) - Std(rho[0..0],rho[5..5])\n"
    );
}

#[test]
fn leading_minus_is_not_a_flag() {
    let o = jlring(&["dual", "-Std(rho[0..0])"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "-Std(rho[0..0])\n");
}

#[test]
fn usage_parse_and_domain_errors_exit_with_two() {
    for args in [
        vec!["frobnicate"],
        vec!["order", "Std(rho[0..1])"],
        vec!["jl", "Std(rho[0..1]"],
        vec!["jl", "Std(sigma[0..1])"],
        vec!["mul", "Irr(rho[0..0])", "Std(rho[1..1])"],
        vec!["lj", "Std(rho[0..2])"],
        vec!["order", "2*Std(rho[0..1])", "Std(rho[0..1])"],
        vec!["check", "nope"],
        vec!["check", "weyl", "--max-degree", "0"],
        vec!["express", "Irr(rho[0..5],rho[1..8],rho[3..6],rho[4..9])"],
        vec!["--scenario", "/nonexistent/scenario.json", "fait"],
    ] {
        let o = jlring(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
        assert!(stdout(&o).is_empty(), "{args:?}");
    }
    let o = jlring(&["jl", "Std(rho[0..1]"]);
    assert!(stderr(&o).contains("column 14"));
    let o = jlring(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn scenarios() {
    let split = scenario_file(r#"{"d":1,"families":[{"name":"rho","p":1,"s":1}]}"#);
    let path = split.path().to_str().unwrap();
    let o = jlring(&["--scenario", path, "jl", "Std(rho'{0;2},rho'{3;1})"]);
    assert_eq!(stdout(&o), "Std(rho[0..1],rho[3..3])\n");
    let o = jlring(&["--scenario", path, "check", "transfer"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let bad = scenario_file(r#"{"d":2,"families":[{"name":"rho","p":1,"s":3}]}"#);
    let o = jlring(&["--scenario", bad.path().to_str().unwrap(), "fait"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("families[0].s"), "{}", stderr(&o));

    let two =
        scenario_file(r#"{"d":2,"families":[{"name":"tau","p":3},{"name":"rho","p":1,"s":2}]}"#);
    let path = two.path().to_str().unwrap();
    let o = jlring(&[
        "--scenario",
        path,
        "--json",
        "lj",
        "Std(tau[0..0],rho[0..0])",
    ]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["scenario"]["families"][0]["name"], "rho");
    assert_eq!(report["result"], "0");

    // tau[0..1] has degree 6, divisible by d, yet tau has no inner-form line
    let o = jlring(&["--scenario", path, "lj", "Std(tau[0..1])"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no D-side line"), "{}", stderr(&o));
}

#[test]
fn check_reports_are_deterministic() {
    let a = jlring(&["check", "order", "--seed", "11", "--json"]);
    let b = jlring(&["check", "order", "--seed", "11", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let keys: Vec<_> = report.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "scenario", "inputs", "result", "checks"]);
    assert_eq!(report["inputs"][1], "seed=11");
    let c = jlring(&["check", "order", "--seed", "12", "--json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn documented_suite_invocations_pass() {
    for args in [
        ["check", "transfer", "--max-degree", "4"],
        ["check", "conjecture", "--max-degree", "5"],
    ] {
        let o = jlring(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}
