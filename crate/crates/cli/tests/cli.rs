use std::process::{Command, Output};

fn s6inv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s6inv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn catalog_lists_orders() {
    let out = s6inv(&["--json", "catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let orders: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![72, 36, 36, 18]);
}

#[test]
fn verify_g1_char0() {
    let out = s6inv(&["verify", "--group", "G1", "--char", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("total degree 72"));
}

#[test]
fn verify_g2_char2_json() {
    let out = s6inv(&["--json", "verify", "--group", "G2", "--char", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["total_degree"], 36);
    assert_eq!(v["seed"], 0);
}

#[test]
fn text_and_json_agree_on_failure() {
    let args = ["verify", "--group", "G4", "--char", "5", "--mutate", "1:2"];
    let text = s6inv(&args);
    assert_eq!(text.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&text.stdout).contains("FAIL"));
    let mut jargs = vec!["--json"];
    jargs.extend(args);
    let js = s6inv(&jargs);
    assert_eq!(js.status.code(), Some(1));
    assert_eq!(json(&js)["passed"], false);
}

#[test]
fn derive_char3_tower_paths() {
    let out = s6inv(&["derive", "--group", "G3", "--char", "3", "--path", "descent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--path"));
    let out = s6inv(&["--json", "derive", "--group", "G3", "--char", "3", "--path", "artin-schreier"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["steps"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(s6inv(&["frobenius", "--pmax", "0", "--inline", "1,0,0,0,0,1,1"]).status.code(), Some(2));
    assert_eq!(s6inv(&["verify", "--group", "G1", "--char", "7"]).status.code(), Some(2));
    assert_eq!(s6inv(&["verify", "--group", "G1", "--bogus"]).status.code(), Some(2));
    let out = s6inv(&["genpoly", "--group", "G2"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("G2") && !msg.contains('§'));
}

#[test]
fn genpoly_identity_check() {
    let out = s6inv(&["--json", "genpoly", "--char", "3", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["form"], "full");
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 6);
}

#[test]
fn specialize_then_frobenius() {
    let dir = std::env::temp_dir().join(format!("s6inv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("sextic.json");
    let f = file.to_str().unwrap();
    let out = s6inv(&["specialize", "--param", "t1=3", "--param", "t2=-7", "--param", "t3=2", "--param", "t4=11", "--param", "t5=-5", "--output", f]);
    assert_eq!(out.status.code(), Some(0));
    let out = s6inv(&["--json", "frobenius", "--poly", f, "--pmax", "3000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["containment"], true);
    let total: u64 = v["census"].as_object().unwrap().values().map(|n| n.as_u64().unwrap()).sum();
    assert_eq!(total, v["total"].as_u64().unwrap());
    assert!(v["tv"].as_f64().unwrap() < 0.15);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn printed_form_fails_containment() {
    let out = s6inv(&["--json", "specialize", "--form", "general-printed", "--param", "t1=3", "--param", "t2=-7", "--param", "t3=2", "--param", "t4=11", "--param", "t5=-5"]);
    let v = json(&out);
    let coeffs: Vec<String> = v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect();
    // re-enter as c6..c0 with leading 1
    let inline = format!("1,{}", coeffs.join(","));
    let out = s6inv(&["frobenius", "--inline", &inline, "--pmax", "3000"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn split_product_census() {
    let out = s6inv(&["--json", "frobenius", "--inline", "1,-21,175,-735,1624,-1764,720", "--pmax", "200"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["census"].as_object().unwrap().len(), 1);
    assert!(v["census"]["[1,1,1,1,1,1]"].as_u64().unwrap() > 0);
    assert_eq!(v["skipped"][0], 5);
}

#[test]
fn masuda_and_random_specialization() {
    let out = s6inv(&["--json", "masuda"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["jacobian_rank"], 3);
    let a = s6inv(&["--seed", "4", "specialize", "--random"]);
    let b = s6inv(&["--seed", "4", "specialize", "--random"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
