use std::process::{Command, Output};

use serde_json::Value;

fn heegner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heegner")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn roundtrip(o: &Output) -> Value {
    let text = stdout(o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "JSON must re-serialize identically");
    v
}

#[test]
fn theta_csv_rows() {
    let o = heegner(&["theta", "--terms", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d,exp_num,exp_den,deg");
    assert!(lines.contains(&"6,1,1,192"));
    assert!(lines.contains(&"8,4,3,3402"));
    assert!(lines.contains(&"12,2,1,196272"));
    assert!(lines.contains(&"14,7,3,917568"));
}

#[test]
fn theta_one_term_boundary() {
    let o = heegner(&["theta", "--terms", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d,exp_num,exp_den,deg\n2,1,3,0\n");
}

#[test]
fn theta_json_is_exact_and_roundtrips() {
    let o = heegner(&["theta", "--terms", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = roundtrip(&o);
    assert_eq!(v["result"]["constant_term"], "-2");
    let degrees = v["result"]["degrees"].as_array().unwrap();
    assert!(degrees.iter().any(|r| r["d"] == "8" && r["degree"] == "3402"));
    assert!(v["provenance"].as_array().unwrap().iter().any(|p| p == "assemble_theta"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(heegner(&["theta", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(heegner(&["theta", "--terms", "0"]).status.code(), Some(2));
    assert_eq!(heegner(&["dim", "--k", "4"]).status.code(), Some(2));
    assert_eq!(heegner(&["eisenstein", "--k", "2"]).status.code(), Some(2));
    assert_eq!(heegner(&["degree", "--d", "10", "--method", "schubert"]).status.code(), Some(2));
    assert_eq!(heegner(&["degree", "--d", "7", "--method", "modular"]).status.code(), Some(2));
    assert_eq!(heegner(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(heegner(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn dim_eleven() {
    let o = heegner(&["dim", "--k", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn degree_all_paths() {
    let o = heegner(&["degree", "--d", "6", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("= 192").count(), 3, "{out}");
    let o = heegner(&["degree", "--d", "8", "--method", "all", "--format", "json"]);
    let v = roundtrip(&o);
    for path in ["modular", "schubert", "segre"] {
        assert_eq!(v["result"]["paths"][path], "3402");
    }
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn degree_modular_beyond_schubert_range() {
    let o = heegner(&["degree", "--d", "12", "--method", "modular", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "method,deg\nmodular,196272\n");
}

#[test]
fn eisenstein_reference_values() {
    let o = heegner(&["eisenstein", "--k", "5", "--terms", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = roundtrip(&o);
    let v0 = &v["result"]["components"][0]["terms"];
    let coeffs: Vec<&str> = v0.as_array().unwrap().iter().map(|t| t["coefficient"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["2", "492", "7200"]);
}

#[test]
fn verify_milgram() {
    let o = heegner(&["verify", "--suite", "milgram"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert!(out.lines().count() >= 4);
}

#[test]
fn verify_all_json() {
    let o = heegner(&["verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = roundtrip(&o);
    assert_eq!(v["result"]["pass"], true);
}
