//! End-to-end checks of the `rmtdpp` binary.

use std::process::{Command, Output};

fn rmtdpp(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rmtdpp"));
    cmd.env_clear().args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).skip(1).collect()
}

#[test]
fn dist_grid_row_count_and_header() {
    let o = rmtdpp(&["dist", "--stat", "extreme-cdf", "--edge", "soft", "--grid", "-6:0.05:2"], &[]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "# stat=extreme-cdf"));
    assert!(text.lines().any(|l| l == "# edge=soft"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 161);
    let last: f64 = rows[160].split(',').nth(1).unwrap().parse().unwrap();
    assert!((last - 0.9998).abs() < 1e-3, "F2(2) = {last}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("wall_time_s="));
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["dist", "--stat", "nope", "--edge", "soft", "--grid", "0:1:1"],
        vec!["dist", "--stat", "extreme-cdf", "--edge", "soft", "--grid", "1:0.1:0"],
        vec!["dist", "--stat", "extreme-cdf", "--edge", "sideways", "--grid", "0:1:1"],
        vec!["moments", "--stat", "extreme", "--edge", "soft", "--rtol", "-1"],
        vec!["sample", "aztec", "--n", "0"],
        vec!["frobnicate"],
    ] {
        let o = rmtdpp(&args, &[]);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote output");
    }
}

#[test]
fn flags_override_env_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# defaults\nstat = extreme-pdf\nedge = soft\ngrid = 0:1:2\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let from_file = stdout(&rmtdpp(&["dist", "--config", cfg], &[]));
    assert!(from_file.contains("# stat=extreme-pdf"));
    assert_eq!(data_rows(&from_file).len(), 3);

    let from_env = stdout(&rmtdpp(&["dist", "--config", cfg], &[("RMTDPP_GRID", "0:1:4")]));
    assert_eq!(data_rows(&from_env).len(), 5);

    let from_flag = stdout(&rmtdpp(&["dist", "--config", cfg, "--grid", "0:1:1"], &[("RMTDPP_GRID", "0:1:4")]));
    assert_eq!(data_rows(&from_flag).len(), 2);
}

#[test]
fn json_output_is_structured() {
    let o = rmtdpp(&["moments", "--stat", "extreme", "--edge", "soft", "--format", "json"], &[]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mean = v["mean"].as_f64().unwrap();
    assert!((mean + 1.771_086_807_411).abs() < 1e-9);
    assert_eq!(v["meta"]["edge"], "soft");
}

#[test]
fn aztec_sample_has_all_dominoes() {
    let o = rmtdpp(&["sample", "aztec", "--n", "10", "--seed", "5"], &[]);
    assert!(o.status.success());
    let text = stdout(&o);
    let t = rmtdpp::aztec::Tiling::from_text(&text).unwrap();
    assert_eq!(t.dominoes.len(), 110);
    t.validate(&rmtdpp::aztec::AztecGraph::new(10).unwrap()).unwrap();
}

#[test]
fn seeded_samples_reproduce() {
    for target in ["gue", "dr-path", "airy-process", "dbm"] {
        let args = ["sample", target, "--seed", "11", "--t", "0:0.5:1", "--N", "30"];
        let a = rmtdpp(&args, &[]);
        let b = rmtdpp(&args, &[]);
        assert!(a.status.success(), "{target}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{target}");
    }
}
