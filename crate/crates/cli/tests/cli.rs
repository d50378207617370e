use std::process::{Command, Output};

fn qeclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeclab"))
        .args(args)
        .env_remove("QECLAB_MAX_ORDER")
        .env_remove("QECLAB_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("qeclab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn model_summary() {
    let o = qeclab(&["model", "genpauli:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["order: 9", "dim: 3", "irreducible: yes", "projectively faithful: yes"] {
        assert!(text.contains(line), "{text}");
    }
}

#[test]
fn model_json_bundles_group_rep_and_cocycle() {
    let o = qeclab(&["model", "pauli:1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["group"]["order"], 4);
    assert_eq!(v["rep"]["dim"], 2);
    assert!(v.get("cocycle").is_some());
}

#[test]
fn reproduce_prop81() {
    let o = qeclab(&["reproduce", "prop8.1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS: classification (clifford=true, weak_stabilizer=false, stabilizer=false, |L|=8, |S|=1)"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn reproduce_every_example() {
    for args in [
        &["reproduce", "prop8.2", "--n", "3"][..],
        &["reproduce", "prop9.1", "--n", "2"],
        &["reproduce", "prod-example"],
    ] {
        let o = qeclab(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn d4_table() {
    let o = qeclab(&["table", "d4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let chi1 = text.lines().find(|l| l.starts_with("chi1")).unwrap();
    assert!(chi1.contains("1+i") && chi1.contains("1-i"), "{chi1}");
}

#[test]
fn bell_code_round_trips_through_classify() {
    let o = qeclab(&["code", "stab", "pauli:2", "--subgroup", "10,5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("bell.json", &stdout(&o));
    let o = qeclab(&["classify", "pauli:2", "--code", &path]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["code_dim"], 1);
    assert_eq!(r["flags"]["is_stabilizer"], true);
    assert_eq!(r["stabilizer"].as_array().unwrap().len(), 4);
}

#[test]
fn phase_files_select_the_code() {
    // f(ZZ) = -1 picks the odd-parity sector
    let phase = scratch("phase.json", r#"{"5": [1, 2], "15": [1, 2]}"#);
    let o = qeclab(&["code", "weak", "pauli:2", "--subgroup", "10,5", "--phase", &phase, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let code: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(code["basis"].as_array().unwrap().len(), 1);
    let basis = &code["basis"][0];
    assert!(basis[0][0].as_f64().unwrap().abs() < 1e-9);
    assert!(basis[1][0].as_f64().unwrap().abs() > 0.5);

    let partial = scratch("partial.json", r#"{"5": [1, 2]}"#);
    let o = qeclab(&["code", "weak", "pauli:2", "--subgroup", "10,5", "--phase", &partial]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn detect_lists_the_family_detectable_set() {
    let o = qeclab(&["detect", "c2d2n:2", "--code", "family"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn correct_reports_witness_and_recovery() {
    let o = qeclab(&["correct", "c2d2n:2", "--code", "family", "--dist", "uniform"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Kraus pair"));

    let o = qeclab(&["correct", "pauli:2", "--code", "stab:10,5", "--dist", "point:8"]);
    assert_eq!(o.status.code(), Some(0));
    let dev: f64 = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("max deviation: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev < 1e-7);

    let weights = scratch("p.json", "[0.5, 0.5, 0.0, 0.0]");
    let o = qeclab(&["correct", "pauli:1", "--code", "whole", "--dist", &weights]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_streams_reports_then_summary() {
    let o = qeclab(&["search", "pauli:1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let json: Vec<serde_json::Value> = text
        .lines()
        .take_while(|l| !l.is_empty())
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(json.len(), 7);
    assert!(text.contains("|L|"));
}

#[test]
fn q3_probe_needs_central_type() {
    assert_eq!(qeclab(&["search", "genpauli:2", "--q3"]).status.code(), Some(0));
    assert_eq!(qeclab(&["search", "xp:3", "--q3"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["model", "nonsense:3"][..],
        &["reproduce", "prop7.1"],
        &["classify", "pauli:1", "--code", "nowhere"],
        &["code", "weak", "pauli:1", "--subgroup", "99"],
        &["frobnicate"],
    ] {
        assert_eq!(qeclab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_come_from_the_environment() {
    let run = |args: &[&str], key: &str| {
        Command::new(env!("CARGO_BIN_EXE_qeclab")).args(args).env(key, "10").output().unwrap()
    };
    assert_eq!(run(&["search", "genpauli:5"], "QECLAB_MAX_ORDER").status.code(), Some(2));
    assert_eq!(run(&["model", "genpauli:11"], "QECLAB_MAX_DIM").status.code(), Some(2));
    assert_eq!(run(&["model", "genpauli:5"], "QECLAB_MAX_DIM").status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&qeclab(&["search", "genpauli:2"]));
    let b = stdout(&qeclab(&["search", "genpauli:2"]));
    assert_eq!(a, b);
}
