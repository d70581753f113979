use serde_json::Value;
use std::process::{Command, Output};
use tanglekit::gfamily::{GParams, Pair};
use tanglekit::tangles;

fn tanglekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanglekit"))
        .args(args)
        .env_remove("TANGLEKIT_THREADS")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap()
}

#[test]
fn tangles_of_the_first_special_case() {
    let doc = json(&tanglekit(&["tangles", "--a", "1", "--b", "0+1i", "--c", "0+1i"]));
    assert_eq!(doc["tool"], "tanglekit");
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["config"]["command"]["tangles"]["b"], serde_json::json!([0.0, 1.0]));
    let result = &doc["result"];
    assert!((result["one_tangle"].as_f64().unwrap() - 0.96).abs() < 1e-12);
    let params = GParams::case1(1.0);
    for (k, pair) in Pair::ALL.iter().enumerate() {
        let c = result["concurrences"][k].as_f64().unwrap();
        assert!((c - tangles::concurrence_closed_form(&params, *pair)).abs() < 1e-15);
    }
}

#[test]
fn negative_complex_arguments() {
    let doc = json(&tanglekit(&["delta", "--a=-0.5-1i", "--b", "2", "--c", "-1.5i", "--j", "3", "--power", "2"]));
    let d = doc["result"]["delta"].as_f64().unwrap();
    let params = GParams {
        a: num_complex::Complex64::new(-0.5, -1.0),
        b: num_complex::Complex64::new(2.0, 0.0),
        c: num_complex::Complex64::new(0.0, -1.5),
    };
    let want = tanglekit::monogamy::delta(&params, tanglekit::tangles::RoofKind::T3, 2.0).unwrap().delta;
    assert_eq!(d, want);
}

#[test]
fn case1_sweep() {
    let doc = json(&tanglekit(&["sweep", "--slice", "case1", "--j", "1", "--tol", "0.005"]));
    let m = doc["result"]["minimal_power"].as_f64().unwrap();
    assert!((m - 2.152).abs() < 0.01, "{m}");
}

#[test]
fn monte_carlo_counts() {
    let doc = json(&tanglekit(&[
        "montecarlo", "--samples", "100000", "--j", "1", "--powers", "2.0,2.1,2.2,2.3", "--seed", "42",
    ]));
    let counts: Vec<u64> = doc["result"]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["negatives"].as_u64().unwrap())
        .collect();
    assert!(counts.windows(2).all(|w| w[0] >= w[1]), "{counts:?}");
    assert_eq!(*counts.last().unwrap(), 0);
}

#[test]
fn repeated_runs_write_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.csv");
    let run = || {
        let out = tanglekit(&[
            "curves", "--slice", "ratio", "--param", "0.5", "--grid", "0.1:2:0.1",
            "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read(&path).unwrap()
    };
    let first = run();
    assert_eq!(first, run());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with(&format!("# tanglekit {}\n# config: ", env!("CARGO_PKG_VERSION"))));
    assert_eq!(text.lines().count(), 2 + 1 + 20);
}

#[test]
fn fit_as_csv() {
    let out = tanglekit(&["fit", "--points", "50", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(2), Some("a,delta1,fitted,f1,f2,f3"));
    assert_eq!(text.lines().count(), 3 + 50);
}

#[test]
fn usage_errors_exit_2() {
    let out = tanglekit(&["tangles", "--a", "1+", "--b", "0", "--c", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "usage");

    let out = tanglekit(&["sweep", "--slice", "ratio"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_json(&out)["message"].as_str().unwrap().contains("--param"));
}

#[test]
fn compute_errors_exit_3() {
    let out = tanglekit(&["sweep", "--slice", "case1", "--j", "1", "--lo", "3", "--hi", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let report = stderr_json(&out);
    assert_eq!(report["error"], "compute");
    assert_eq!(report["exit_code"], 3);
}

#[test]
fn io_errors_exit_4() {
    let out = tanglekit(&["tangles", "--a", "1", "--b", "1", "--c", "1", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stderr_json(&out)["error"], "io");
}

#[test]
fn help_and_thread_cap() {
    assert!(tanglekit(&["--help"]).status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_tanglekit"))
        .args(["tangles", "--a", "1", "--b", "1", "--c", "1"])
        .env("TANGLEKIT_THREADS", "two")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_tanglekit"))
        .args(["montecarlo", "--samples", "1000", "--powers", "2"])
        .env("TANGLEKIT_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}
