use std::process::{Command, Output};

fn knodel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knodel"))
        .args(args)
        .output()
        .expect("spawn knodel")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_dimacs_header() {
    let o = knodel(&["gen", "--delta", "3", "--n", "8", "--format", "dimacs"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("p edge 8 12"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 12);
}

#[test]
fn gen_json_edges() {
    let o = knodel(&["gen", "--delta", "4", "--n", "16", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["delta"], 4);
    assert_eq!(v["n"], 16);
    assert_eq!(v["edges"].as_array().unwrap().len(), 32);
}

#[test]
fn gen_rejects_large_degree() {
    let o = knodel(&["gen", "--delta", "5", "--n", "16"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree 5"));
}

#[test]
fn gamma_with_and_without_deletion() {
    let o = knodel(&["gamma", "--delta", "3", "--n", "12", "--delete", "v1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("gamma(W(3,12)) = 4 "), "{text}");
    assert!(text.contains("gamma(W(3,12) - v1) = 3 "), "{text}");

    let o = knodel(&["gamma", "--delta", "4", "--n", "46"]);
    assert!(stdout(&o).contains("= 11 "));
}

#[test]
fn gamma_rejects_bad_vertex() {
    assert!(!knodel(&["gamma", "--delta", "3", "--n", "12", "--delete", "w1"]).status.success());
    assert!(!knodel(&["gamma", "--delta", "3", "--n", "12", "--delete", "v7"]).status.success());
}

#[test]
fn classify_lines() {
    let o = knodel(&["classify", "--delta", "3", "--n", "20"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("verdict Critical") && text.contains("predicted Critical agree"), "{text}");

    let text = stdout(&knodel(&["classify", "--delta", "4", "--n", "40"]));
    assert!(text.contains("verdict Stable") && text.contains("predicted Stable agree"), "{text}");

    let text = stdout(&knodel(&["classify", "--delta", "2", "--n", "12", "--mode", "all"]));
    assert!(text.contains("verdict") && !text.contains("predicted"), "{text}");
}

#[test]
fn sweep_csv_and_jsonl() {
    let o = knodel(&["sweep", "--delta", "3", "--min", "8", "--max", "24"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().skip(1).all(|l| l.contains(",true,true,")));

    let o = knodel(&["sweep", "--delta", "4", "--min", "16", "--max", "26", "--out", "jsonl"]);
    assert!(o.status.success());
    let verdicts: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["verdict_solver"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(verdicts, ["Stable", "Stable", "Stable", "Critical", "Stable", "Critical"]);

    let o = knodel(&["sweep", "--delta", "3", "--min", "30", "--max", "20"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn budget_env_var_aborts_sweep() {
    let o = Command::new(env!("CARGO_BIN_EXE_knodel"))
        .args(["sweep", "--delta", "4", "--min", "16", "--max", "20"])
        .env("KNODEL_NODE_BUDGET", "2")
        .output()
        .unwrap();
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("W(4,16)"));
}

#[test]
fn verify_constructions() {
    let o = knodel(&["verify", "--suite", "constructions"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("literal set has 10 vertices (claimed 9)"), "{text}");
    assert!(text.ends_with("4 checks, 0 failed\n"), "{text}");
}
