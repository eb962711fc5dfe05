//! Black-box tests of the reslab binary: argument validation, file
//! round-trips, and reproducibility of written reports.

use std::path::PathBuf;
use std::process::{Command, Output};

use resilience_core::graph::parse_edge_list;

fn reslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslab"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Fresh per-test scratch directory under the system temp dir.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reslab-cli-{}-{name}", std::process::id()));
    std::fs::remove_dir_all(&dir).ok();
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const C5: &str = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const PETERSEN: &str = "10 15\n0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";

#[test]
fn gen_is_deterministic_and_well_formed() {
    let dir = scratch("gen-det");
    let a = dir.join("a.txt");
    let b = dir.join("b.txt");
    for path in [&a, &b] {
        let out = reslab(&[
            "gen", "--model", "gnp", "--n", "60", "--p", "0.3", "--seed", "7", "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let text_a = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text_a, std::fs::read_to_string(&b).unwrap());

    let g = parse_edge_list(&text_a).unwrap();
    assert_eq!(g.n(), 60);
    let header = text_a.lines().next().unwrap();
    assert_eq!(header, format!("60 {}", g.edge_count()));
    assert!(g.edge_count() > 0);
}

#[test]
fn gen_at_p_one_yields_the_complete_graph() {
    let out = reslab(&["gen", "--model", "gnp", "--n", "100", "--p", "1", "--seed", "1"]);
    assert!(out.status.success());
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(g.edge_count(), 100 * 99 / 2);
}

#[test]
fn gen_rejects_invalid_arguments() {
    let bad_p = reslab(&["gen", "--model", "gnp", "--n", "10", "--p", "1.5"]);
    assert!(!bad_p.status.success());
    assert!(stderr(&bad_p).contains("error"), "{}", stderr(&bad_p));

    let missing_p = reslab(&["gen", "--model", "gnp", "--n", "10"]);
    assert!(!missing_p.status.success());

    let stray_d = reslab(&["gen", "--model", "gnp", "--n", "10", "--p", "0.5", "--d", "3"]);
    assert!(!stray_d.status.success());

    let regular_with_p = reslab(&["gen", "--model", "regular", "--n", "10", "--p", "0.5"]);
    assert!(!regular_with_p.status.success());

    let unknown_flag = reslab(&["gen", "--model", "gnp", "--n", "10", "--p", "0.5", "--frobnicate"]);
    assert!(!unknown_flag.status.success());
}

#[test]
fn gen_announces_a_sampled_seed() {
    let out = reslab(&["gen", "--model", "gnp", "--n", "10", "--p", "0.5"]);
    assert!(out.status.success());
    let err = stderr(&out);
    assert!(err.contains("seed:") && err.contains("sampled"), "{err}");
}

#[test]
fn check_reports_a_perfect_matching_on_the_path() {
    let dir = scratch("check-matching");
    let path = dir.join("p4.txt");
    std::fs::write(&path, P4).unwrap();
    let out = reslab(&["check", "--property", "matching", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["perfect"], true);
    assert_eq!(v["verdict"]["size"], 2);
}

#[test]
fn check_finds_the_cycle_of_c5() {
    let dir = scratch("check-hamilton");
    let path = dir.join("c5.txt");
    std::fs::write(&path, C5).unwrap();
    let out = reslab(&[
        "check", "--property", "hamilton", "--graph", path.to_str().unwrap(), "--seed", "3",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["found"], true);
    assert_eq!(v["verdict"]["cycle"].as_array().unwrap().len(), 5);
}

#[test]
fn check_exact_refutes_the_petersen_graph() {
    let dir = scratch("check-petersen");
    let path = dir.join("petersen.txt");
    std::fs::write(&path, PETERSEN).unwrap();
    let out = reslab(&[
        "check", "--property", "hamilton", "--graph", path.to_str().unwrap(), "--exact",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["found"], false);
}

#[test]
fn attack_isolate_removes_a_triangle_from_k4() {
    let dir = scratch("attack-isolate");
    let path = dir.join("k4.txt");
    std::fs::write(&path, K4).unwrap();
    let move_path = dir.join("move.json");
    let graph_path = dir.join("after.txt");
    let out = reslab(&[
        "attack", "--strategy", "isolate", "--graph", path.to_str().unwrap(), "--seed", "5",
        "--out-move", move_path.to_str().unwrap(), "--out-graph", graph_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    // the larger half of K4 is a triangle; the move deletes all of it
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["move"]["h_m"], 3);
    assert_eq!(v["move"]["h_max_degree"], 2);
    assert_eq!(v["move"]["result_m"], 3);

    let full: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&move_path).unwrap()).unwrap();
    assert_eq!(full["h_edges"].as_array().unwrap().len(), 3);
    let after = parse_edge_list(&std::fs::read_to_string(&graph_path).unwrap()).unwrap();
    assert_eq!(after.edge_count(), 3);
}

#[test]
fn attack_with_zero_budget_is_a_no_op() {
    let dir = scratch("attack-zero");
    let path = dir.join("k4.txt");
    std::fs::write(&path, K4).unwrap();
    let out = reslab(&[
        "attack", "--strategy", "random", "--graph", path.to_str().unwrap(), "--budget", "0",
        "--mode", "delete", "--seed", "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["move"]["h_m"], 0);
    assert_eq!(v["move"]["result_m"], 6);
}

#[test]
fn attack_from_file_rejects_an_over_budget_move() {
    let dir = scratch("attack-overbudget");
    let graph = dir.join("k4.txt");
    let star = dir.join("star.txt");
    std::fs::write(&graph, K4).unwrap();
    std::fs::write(&star, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let out = reslab(&[
        "attack", "--strategy", "from-file", "--graph", graph.to_str().unwrap(), "--h",
        star.to_str().unwrap(), "--mode", "delete", "--budget", "2",
    ]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("exceeding budget") && err.contains("vertex 0"), "{err}");
}

#[test]
fn sweep_writes_reports_and_reproduces_them() {
    let dir = scratch("sweep-repro");
    let run = |prefix: &str| {
        let out = reslab(&[
            "sweep", "--property", "matching", "--model", "gnp", "--n", "40", "--p", "0.4",
            "--strategy", "random", "--mode", "delete", "--budgets", "1,3", "--trials", "4",
            "--seed", "11", "--out", dir.join(prefix).to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    };
    run("s1");
    run("s2");

    for suffix in ["jsonl", "summary.json", "csv"] {
        assert!(dir.join(format!("s1.{suffix}")).exists(), "missing s1.{suffix}");
    }
    let summary_1 = std::fs::read(dir.join("s1.summary.json")).unwrap();
    assert_eq!(summary_1, std::fs::read(dir.join("s2.summary.json")).unwrap());
    assert_eq!(
        std::fs::read(dir.join("s1.csv")).unwrap(),
        std::fs::read(dir.join("s2.csv")).unwrap()
    );
    let csv = std::fs::read_to_string(dir.join("s1.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "budget,destroyed_fraction,ci_lo,ci_hi");
    assert_eq!(csv.lines().count(), 3);

    let v: serde_json::Value = serde_json::from_slice(&summary_1).unwrap();
    assert_eq!(v["config"]["trials"], 4);
    assert_eq!(v["curve"]["points"].as_array().unwrap().len(), 2);
}

#[test]
fn sweep_config_file_matches_flags() {
    let dir = scratch("sweep-config");
    let config = dir.join("exp.conf");
    std::fs::write(
        &config,
        "# tiny smoke sweep\nproperty = matching\nmodel = gnp\nn = 40\np = 0.4\n\
         strategy = random\nmode = delete\nbudgets = 1,3\ntrials = 4\nseed = 11\n",
    )
    .unwrap();

    let from_file = reslab(&[
        "sweep", "--config", config.to_str().unwrap(), "--out",
        dir.join("file").to_str().unwrap(),
    ]);
    assert!(from_file.status.success(), "{}", stderr(&from_file));
    let from_flags = reslab(&[
        "sweep", "--property", "matching", "--model", "gnp", "--n", "40", "--p", "0.4",
        "--strategy", "random", "--mode", "delete", "--budgets", "1,3", "--trials", "4",
        "--seed", "11", "--out", dir.join("flags").to_str().unwrap(),
    ]);
    assert!(from_flags.status.success(), "{}", stderr(&from_flags));

    assert_eq!(
        std::fs::read(dir.join("file.summary.json")).unwrap(),
        std::fs::read(dir.join("flags.summary.json")).unwrap()
    );
}

#[test]
fn sweep_rejects_unknown_config_keys() {
    let dir = scratch("sweep-badkey");
    let config = dir.join("exp.conf");
    std::fs::write(&config, "property = matching\nbudgett = 3\n").unwrap();
    let out = reslab(&["sweep", "--config", config.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("budgett"), "{}", stderr(&out));
}

#[test]
fn validate_reports_a_clean_pass_fraction() {
    let out = reslab(&[
        "validate", "--lemma", "degree-concentration", "--n", "400", "--p", "0.2", "--trials",
        "3", "--samples", "1", "--seed", "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["pass_fraction"], 1.0);
    assert_eq!(v["report"]["trials"], 3);
}
