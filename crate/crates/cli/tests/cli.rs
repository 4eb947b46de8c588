use std::path::PathBuf;
use std::process::{Command, Output};

fn aldous(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aldous")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aldous-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn generate_wheel() {
    let o = aldous(&["generate", "wheel", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["n"], 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn gap_on_wheel_passes() {
    let g = stdout(&aldous(&["generate", "wheel", "7"]));
    let path = scratch("w7.json", &g);
    let o = aldous(&["gap", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    let (gi, gr) = (v["gap_interchange"].as_f64().unwrap(), v["gap_rw"].as_f64().unwrap());
    assert!((gi - gr).abs() < 1e-9);
    assert_eq!(v["argmin_partition"], "(6,1)");
}

#[test]
fn gap_on_two_vertices() {
    let path = scratch("k2.json", r#"{"n": 2, "edges": [[1, 2, 0.75]]}"#);
    let o = aldous(&["gap", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!((v["gap_interchange"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    assert!((v["gap_rw"].as_f64().unwrap() - 1.5).abs() < 1e-12);
}

#[test]
fn invalid_input_exits_2_without_stdout() {
    let bad = scratch("bad.json", "{\"n\": 3, \"edges\": [[1, 1, 1.0]]");
    for args in [
        vec!["gap", bad.to_str().unwrap()],
        vec!["gap", "/nonexistent/graph.json"],
        vec!["check-conjecture", "--k", "4", "--gamma", "1,2"],
        vec!["check-conjecture", "--k", "4", "--gamma", "1,-2,3"],
        vec!["rep", "3,2,4", "(12)"],
        vec!["rep", "3,1", "(15)"],
        vec!["generate", "octopus", "3"],
        vec!["--tol", "0", "generate", "wheel", "5"],
    ] {
        let o = aldous(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn check_conjecture_report() {
    let o = aldous(&["check-conjecture", "--k", "4", "--gamma", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["per_lambda"].as_array().unwrap().len(), 5);
    let csv = stdout(&aldous(&["check-conjecture", "--k", "3", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn rep_matches_tabulated_transposition() {
    let o = aldous(&["rep", "3,1", "(14)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    // I - v vᵀ with v = (√(4/3), √(1/6), √(1/2))
    let v = [(4.0f64 / 3.0).sqrt(), (1.0f64 / 6.0).sqrt(), 0.5f64.sqrt()];
    for r in 0..3 {
        for c in 0..3 {
            let e = if r == c { 1.0 } else { 0.0 } - v[r] * v[c];
            assert!((rows[r][c] - e).abs() < 1e-12);
        }
    }
}

#[test]
fn decompose_matches_direct() {
    let g = stdout(&aldous(&["--seed", "7", "generate", "random", "4"]));
    let path = scratch("r4.json", &g);
    let o = aldous(&["decompose", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["direct_matches"], true);
    assert_eq!(v["multiset"].as_array().unwrap().len(), 24);
}

#[test]
fn certify_and_replay() {
    let g = stdout(&aldous(&["--seed", "3", "generate", "nested", "2", "1", "--random-weights"]));
    let path = scratch("t21.json", &g);
    let o = aldous(&["certify", "--k", "4", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let cert = scratch("t21.cert.json", &stdout(&o));
    let r = aldous(&["certify", "--replay", cert.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(json(&r)["valid"], true);

    let k5 = scratch("k5.json", &stdout(&aldous(&["generate", "complete", "5"])));
    assert_eq!(aldous(&["certify", "--k", "4", k5.to_str().unwrap()]).status.code(), Some(1));
    let red = aldous(&["reduce", k5.to_str().unwrap()]);
    assert_eq!(red.status.code(), Some(1));
    assert_eq!(json(&red)["status"], "no_applicable_rule");
}

#[test]
fn output_is_deterministic() {
    let a = aldous(&["--seed", "11", "generate", "random", "6", "--p", "0.4"]);
    let b = aldous(&["--seed", "11", "generate", "random", "6", "--p", "0.4"]);
    assert_eq!(a.stdout, b.stdout);
    let path = scratch("r6.json", &stdout(&a));
    let x = aldous(&["gap", path.to_str().unwrap()]);
    let y = aldous(&["gap", path.to_str().unwrap()]);
    assert_eq!(x.stdout, y.stdout);
}
