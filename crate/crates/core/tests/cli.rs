use std::process::{Command, Output};

fn ccg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccg"))
        .args(args)
        .output()
        .expect("ccg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn zplus_of_a_musical_graph() {
    let o = ccg(&["zplus", "--family", "musical:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("7"));

    let o = ccg(&["zplus", "--family", "C:6", "--standard", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["zplus"]["value"], 2);
    assert_eq!(v["z"], 2);
}

#[test]
fn compress_to_dot() {
    let o = ccg(&["compress", "--family", "circ:6:1,2", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 6);
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 12);
    assert!(text.contains("\"{1,2}\""));
}

#[test]
fn compress_json_carries_phi_and_labels() {
    let o = ccg(&["compress", "--family", "musical:4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);
    assert_eq!(v["phi"].as_array().unwrap().len(), 8);
    assert_eq!(v["cover"].as_array().unwrap().len(), 4);
}

#[test]
fn compress_refuses_a_graph_without_simple_cover() {
    let o = ccg(&["compress", "--family", "fig1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn check_exit_codes() {
    let o = ccg(&["check", "--corpus", "5", "--theorem", "thm-zplus-compress"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().contains("0 failed"));

    let o = ccg(&["check", "--family", "musical:3", "--theorem", "lem-musical"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL lem-musical musical:3"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["gen", "circ:6:4"][..],
        &["cc", "--g6", "C~~"],
        &["check", "--corpus", "8"],
        &["check", "--theorem", "no-such-theorem"],
        &["zplus"],
        &["frobnicate"],
    ] {
        let o = ccg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = ccg(&["gen", "circ:6:4"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.matches("K:n | P:n").count(), 1, "{err}");
}

#[test]
fn check_json_is_stable_across_thread_counts() {
    let run = |jobs: &str| {
        let o = ccg(&[
            "--jobs",
            jobs,
            "check",
            "--corpus",
            "5",
            "--family",
            "musical:4",
            "--family",
            "circ:6:1,2",
            "--json",
        ]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let v: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn unfiltered_check_runs_every_theorem() {
    let o = ccg(&["check", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let listed = stdout(&ccg(&["check", "--list"]));
    for line in listed.lines() {
        let id = line.split('\t').next().unwrap();
        let executed = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .any(|r| r["theorem"] == id && r["verdict"]["status"] != "skipped");
        assert!(executed, "{id} never ran");
    }
}

#[test]
fn gen_formats_round_trip_through_input() {
    let dir = std::env::temp_dir().join(format!("ccg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.txt");
    let out = ccg(&[
        "--out",
        path.to_str().unwrap(),
        "gen",
        "W:6",
        "--format",
        "edgelist",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cc = ccg(&["cc", "--input", path.to_str().unwrap()]);
    assert_eq!(stdout(&cc).lines().next(), Some("5"));
    let g6 = stdout(&ccg(&["gen", "W:6", "--format", "graph6"]));
    let cc = ccg(&["cc", g6.trim()]);
    assert_eq!(stdout(&cc).lines().next(), Some("5"));
    std::fs::remove_dir_all(&dir).unwrap();
}
