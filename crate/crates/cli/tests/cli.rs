use std::path::PathBuf;
use std::process::{Command, Output};

fn qed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qed")).args(args).output().expect("qed runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qed-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const K3: &str = r#"{"vertices": ["1", "2"], "arrows": [["1", "2"], ["1", "2"], ["1", "2"]]}"#;

#[test]
fn classify_file() {
    let path = fixture("k3.json", K3);
    let out = qed(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "component {1,2}: wild");
}

#[test]
fn nullroot_of_wild_is_domain_error() {
    let path = fixture("k3-null.json", K3);
    let out = qed(&["nullroot", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("quiver is wild; null root undefined"));
}

#[test]
fn nullroot_of_tame() {
    let out = qed(&["nullroot", "@U_4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["null_root"], serde_json::json!(["2", "1", "1", "1", "1"]));
}

#[test]
fn table_json() {
    let out = qed(&["table", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 18);
    let e8 = rows.iter().find(|r| r["name"] == "E8-tilde-tilde").unwrap();
    assert_eq!(e8["lambda"], "1/2480");
}

#[test]
fn json_is_byte_stable() {
    let a = qed(&["lambda", "@K3K3", "--json"]);
    let b = qed(&["lambda", "@K3K3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["lambda"], "1/4");
    assert_eq!(doc["witness_vertices"], serde_json::json!(["1", "2"]));
    assert_eq!(doc["alpha"], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qed(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qed(&["classify", "/definitely/not/here.json"]).status.code(), Some(2));
    assert_eq!(qed(&["classify", "@Nope_3"]).status.code(), Some(2));
    assert_eq!(qed(&["growth", "@K_3"]).status.code(), Some(2));
    let bad = fixture("bad.json", r#"{"vertices": ["1", "1"], "arrows": []}"#);
    assert_eq!(qed(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    let broken = fixture("broken.json", "{\"vertices\": [");
    assert_eq!(qed(&["classify", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn growth_marks_wild_output() {
    let out = qed(&["growth", "@K_3", "--n", "4"]);
    let text = stdout(&out);
    assert!(text.contains("lower bound: 5"));
    assert!(text.contains("upper bound: 11"));
    assert!(text.contains("asymptotic only"));
    let out = qed(&["growth", "@K_2", "--n", "7", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["exact_value"], 3);
}

#[test]
fn approx_only_on_request() {
    let plain = stdout(&qed(&["lambda", "@E8tt"]));
    assert_eq!(plain.trim(), "lambda: 1/2480");
    let approx = stdout(&qed(&["lambda", "@E8tt", "--approx"]));
    assert!(approx.contains("approx 0.000403226"));
}

#[test]
fn edrep_and_roots() {
    assert_eq!(stdout(&qed(&["edrep", "@U_4", "--alpha", "2,1,1,1,1"])).trim(), "ed = 1");
    assert_eq!(qed(&["edrep", "@K_3", "--alpha", "1,1"]).status.code(), Some(1));
    let out = qed(&["roots", "@D_4", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["count"], 12);
    assert_eq!(qed(&["roots", "@L_2"]).status.code(), Some(1));
}

#[test]
fn minimal_wild_flags() {
    let out = qed(&["minimal-wild", "@E8tt", "--graph", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc, serde_json::json!({"minimal_wild_graph": true}));
    let out = qed(&["minimal-wild", "@K_4", "--quiver"]);
    assert_eq!(stdout(&out).trim(), "minimal wild quiver: true");
    let out = qed(&["minimal-wild", "@K_4", "--graph"]);
    assert_eq!(stdout(&out).trim(), "minimal wild graph: false");
}

#[test]
fn family_and_hom() {
    let out = qed(&["family-d4", "--m", "1", "--poly", "-2,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["dims"]["0"], 2);
    let rep = fixture("d4.json", &stdout(&out));
    let out = qed(&["hom", rep.to_str().unwrap(), rep.to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["hom_dim"], 1);
    assert_eq!(doc["ext1_dim"], 1);
    assert_eq!(doc["euler_form"], "0");
    assert_eq!(qed(&["family-d4", "--m", "2", "--poly", "1,1"]).status.code(), Some(1));
}

#[test]
fn hom_with_named_quiver() {
    let m = fixture("s1.json", r#"{"quiver": "@A_2", "dims": {"1": 1}}"#);
    let n = fixture("s2.json", r#"{"quiver": "@A_2", "dims": {"2": 1}}"#);
    let out = qed(&["hom", m.to_str().unwrap(), n.to_str().unwrap()]);
    assert_eq!(stdout(&out), "hom = 0\next1 = 1\neuler form = -1\n");
}

#[test]
fn catalog_listing() {
    let out = qed(&["catalog", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("@E8tt+j"));
    let out = qed(&["catalog", "@K_3"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["arrows"].as_array().unwrap().len(), 3);
}
