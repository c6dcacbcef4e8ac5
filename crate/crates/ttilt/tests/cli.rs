use std::process::{Command, Output};

fn ttilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttilt")).args(args).env_remove("TTILT_MAX_NODES").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("ttilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn basis_of_catalog_entry() {
    let o = ttilt(&["basis", "@Gamma2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dim 7"));
    assert!(s.contains("mu*beta^2"));
}

#[test]
fn basis_of_file() {
    let p = tmp("g2.alg");
    std::fs::write(&p, "algebra G over Q\nvertices 1 2\narrows mu: 1 -> 2, beta: 2 -> 2\nrelations beta^n\n").unwrap();
    let o = ttilt(&["basis", p.to_str().unwrap(), "-p", "n=3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("dim 7"));
}

#[test]
fn hasse_writes_deterministic_json_and_dot() {
    let (j1, j2, dot) = (tmp("a.json"), tmp("b.json"), tmp("g.dot"));
    for j in [&j1, &j2] {
        let o = ttilt(&["hasse", "@Gamma2", "--json", j.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("finite 8 H(1,5)"));
    }
    let a = std::fs::read_to_string(&j1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&j2).unwrap());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["verdict"]["kind"], "finite");
    assert_eq!(v["verdict"]["count"], 8);
    assert_eq!(v["verdict"]["type"], serde_json::json!([1, 5]));
    assert_eq!(v["pass"], true);
    assert!(v.get("timing_ms").is_none());
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
}

#[test]
fn infinite_entry_exits_zero_when_expected() {
    let o = ttilt(&["hasse", "@Gamma3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("infinite"));
}

#[test]
fn tiny_node_bound_exits_three() {
    let o = ttilt(&["hasse", "@Brauer3", "--max-nodes", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(ttilt(&["basis", "@NoSuchAlgebra"]).status.code(), Some(2));
    assert_eq!(ttilt(&["basis", "/nonexistent/file.alg"]).status.code(), Some(2));
    let p = tmp("bad.alg");
    std::fs::write(&p, "algebra A over Q\nvertices 1\narrows a: 1 -> 1\nrelations a^2 - b\n").unwrap();
    let o = ttilt(&["basis", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown arrow"));
    assert_eq!(ttilt(&["check", "--table", "Nope"]).status.code(), Some(2));
}

#[test]
fn check_d_table_passes() {
    let o = ttilt(&["check", "--table", "D"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4/4 pass"));
}

#[test]
fn check_reports_mismatch_with_exit_one() {
    // Gamma5 is listed as infinite but enumerates to a finite poset here
    let o = ttilt(&["check", "--table", "Gamma"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL Gamma5"));
}

#[test]
fn check_brauer_single() {
    let o = ttilt(&["check", "--table", "Brauer", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("finite 20"));
}

#[test]
fn reduce_and_op() {
    let o = ttilt(&["reduce", "@Gamma20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 4"));
    let o = ttilt(&["op", "@Gamma8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ttilt(&["op", "@Gamma3"]).status.code(), Some(3));
}

#[test]
fn catalog_list() {
    let o = ttilt(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Gamma20"));
    assert!(stdout(&o).contains("W34"));
}
