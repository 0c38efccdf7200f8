use std::path::Path;
use std::process::{Command, Output};

fn preinforce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preinforce"))
        .args(args)
        .env("PREINFORCE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = preinforce(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

fn text_value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gamma_text_and_json_agree() {
    let j = json(&["gamma", "--family", "path:7", "-p", "2"]);
    assert_eq!(j["gamma_p"], 4);
    let t = stdout(&preinforce(&["gamma", "--family", "path:7", "-p", "2"]));
    assert_eq!(text_value(&t, "gamma_p"), "4");
}

#[test]
fn reinforce_certificate_round_trips_through_verify_cert() {
    let dir = tempfile::tempdir().unwrap();
    let o = preinforce(&["reinforce", "--family", "cycle:6", "-p", "2", "--format", "json"]);
    assert!(o.status.success());
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert["r_p"], 4);
    let path = write(dir.path(), "cert.json", &stdout(&o));

    let ok = preinforce(&["verify-cert", "--family", "cycle:6", "-p", "2", "--cert", &path]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "certificate valid\n");

    // same certificate against a different graph
    let bad = preinforce(&["verify-cert", "--family", "cycle:7", "-p", "2", "--cert", &path]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stdout(&bad).starts_with("certificate invalid"));
}

#[test]
fn file_family_reads_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p7.edges", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let from_file = json(&["reinforce", "--family", &format!("file:{path}"), "-p", "2"]);
    let direct = json(&["reinforce", "--family", "path:7", "-p", "2"]);
    assert_eq!(from_file["r_p"], direct["r_p"]);
    assert_eq!(from_file["gamma_before"], direct["gamma_before"]);
}

#[test]
fn formula_reports_both_minimums() {
    let j = json(&["formula", "--family", "kpartite:5,5", "-p", "2"]);
    assert_eq!(j["r_p_by_counts"], 3);
    let j = json(&["formula", "--family", "kpartite:2,2,10,17", "-p", "11"]);
    assert_eq!(j["r_p"], 1);
    assert_eq!(j["gamma_p"], 12);
}

#[test]
fn exit_codes() {
    assert_eq!(preinforce(&["gamma", "--family", "path:0", "-p", "2"]).status.code(), Some(1));
    assert_eq!(preinforce(&["gamma", "--family", "bogus:3", "-p", "2"]).status.code(), Some(1));
    assert_eq!(preinforce(&["gamma", "--family", "path:4", "-p", "0"]).status.code(), Some(1));
    assert_eq!(preinforce(&["gamma", "--family", "path:4", "-p", "2", "--cert"]).status.code(), Some(1));
    assert_eq!(preinforce(&["gamma", "--family", "file:/nonexistent/x", "-p", "1"]).status.code(), Some(1));
    // eta_p is undefined when gamma_p <= p
    assert_eq!(preinforce(&["eta", "--family", "kpartite:1,1,1,1", "-p", "2"]).status.code(), Some(1));

    let big = preinforce(&["eta", "--family", "cycle:31", "-p", "2"]);
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&big.stderr).contains("refuses"));
    assert_eq!(preinforce(&["--help"]).status.code(), Some(0));
}

#[test]
fn reduce_writes_edges_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "tiny.cnf", "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    let prefix = dir.path().join("gadget");
    let o = preinforce(&["reduce", "--cnf", &cnf, "-p", "2", "--out", prefix.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let edges = std::fs::read_to_string(prefix.with_extension("edges")).unwrap();
    let graph = preinforce::parse_edge_list(&edges).unwrap();
    let labels = std::fs::read_to_string(prefix.with_extension("labels")).unwrap();
    assert_eq!(labels.lines().count(), graph.n());
    assert!(labels.contains("~u_1") && labels.contains("c_2"));

    let v = preinforce(&["verify", "--cnf", &cnf, "-p", "2"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("equivalence holds: SAT=true, r_p=1"));

    let broken = write(dir.path(), "bad.cnf", "p cnf 3 1\n1 2 0\n");
    assert_eq!(preinforce(&["verify", "--cnf", &broken, "-p", "2"]).status.code(), Some(1));
}

#[test]
fn sweep_prints_csv() {
    let o = preinforce(&["sweep", "--family", "cycle:5..=7", "--p-range", "1..=2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("instance,n,p,gamma_p"));
    assert_eq!(lines.count(), 6);
}
