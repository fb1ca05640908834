use std::io::Write;
use std::process::{Command, Output, Stdio};

use maxnik::certify::{validate, Certificate, Verdict};
use maxnik::graph6;
use maxnik::library::k7_minus;

fn maxnik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxnik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn maxnik_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxnik"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn size_22_is_refused() {
    let o = maxnik(&["construct", "--size", "22"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("size 22"), "{err}");
}

#[test]
fn k7_minus_certifies_maxnik() {
    let g6 = graph6::encode(&k7_minus());
    let o = maxnik(&["certify", &g6]);
    assert_eq!(o.status.code(), Some(0));
    let cert: Certificate = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(cert.verdict, Verdict::Maxnik);
    validate(&cert).unwrap();
}

#[test]
fn two_triangulations_of_order_six() {
    let o = maxnik(&["enumerate", "--order", "6", "--kind", "triangulation", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn bad_flags_exit_64() {
    assert_eq!(maxnik(&["construct", "--size", "nope"]).status.code(), Some(64));
    assert_eq!(maxnik(&["closure", "--seed", "k9", "--moves", "dy"]).status.code(), Some(64));
    assert_eq!(maxnik(&["--help"]).status.code(), Some(0));
}

#[test]
fn batch_keeps_input_order() {
    let inputs = ["HxHYs}]", "F^~~w", "Bw", "F~~~w", "C~"];
    let o = maxnik_stdin(&["certify", "--format", "text"], &inputs.join("\n"));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), inputs.len());
    for (line, g) in lines.iter().zip(inputs) {
        assert!(line.starts_with(g), "{line}");
    }
    assert!(lines[3].contains("NOT_MAXNIK"));
}

#[test]
fn batch_errors_keep_their_line() {
    let o = maxnik_stdin(&["certify"], "Bw\n!!\nC~\n");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("{\"error\""));
}

#[test]
fn output_is_deterministic() {
    let a = maxnik(&["construct", "--size", "57"]);
    let b = maxnik(&["construct", "--size", "57"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let cert: Certificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert_eq!(cert.graph.size(), 57);
    validate(&cert).unwrap();
}

#[test]
fn closure_counts() {
    for (seed, moves, count) in [("k7", "dy", 14), ("k7", "dy,yd", 20), ("k3311", "dy", 26), ("k3311", "dy,yd", 58)] {
        let o = maxnik(&["closure", "--seed", seed, "--moves", moves, "--format", "graph6"]);
        assert_eq!(stdout(&o).lines().count(), count, "{seed} {moves}");
    }
}

#[test]
fn minor_and_prime() {
    let o = maxnik(&["minor", "--pattern", "D~{", "--host", "F^~~w"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["minor"], true);
    let o = maxnik(&["prime", "F^~~w"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["prime"], false);
}

#[test]
fn degree_table_reports_order_nine() {
    let o = maxnik(&["tables", "--which", "deg"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let d = v["discrepancies"].as_array().unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0]["order"], 9);
}

#[test]
fn enumerate_writes_sidecars() {
    let dir = std::env::temp_dir().join(format!("maxnik-cli-{}", std::process::id()));
    let o = maxnik(&["enumerate", "--order", "7", "--kind", "maxnik", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g6 = std::fs::read_to_string(dir.join("maxnik-7.g6")).unwrap();
    assert_eq!(g6.lines().count(), 1);
    let certs = std::fs::read_to_string(dir.join("maxnik-7.certs.jsonl")).unwrap();
    let cert: Certificate = serde_json::from_str(certs.lines().next().unwrap()).unwrap();
    validate(&cert).unwrap();
    std::fs::remove_dir_all(dir).unwrap();
}
