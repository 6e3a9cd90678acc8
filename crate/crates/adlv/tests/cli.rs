use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn adlv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adlv")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = adlv(&a);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn group_file(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "groups", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn describe_reports_weyl_orders() {
    let (code, v) = json(&["describe", "--group", "2A3"]);
    assert_eq!(code, 0);
    assert_eq!(v["weyl_order"], 24);
    assert_eq!(v["relative_weyl_order"], 8);
    assert_eq!(v["pi1_coinvariants"], serde_json::json!([2]));
    let (_, v) = json(&["describe", "--group", "A1"]);
    assert_eq!(v["weyl_order"], 2);
    let (_, v) = json(&["describe", "--group", "2E6"]);
    assert_eq!(v["weyl_order"], 51840);
}

#[test]
fn group_files_match_catalog() {
    let pairs = [("unitary4_sc.toml", "A3sc-flip"), ("triality.toml", "3D4"), ("res_b2.toml", "B2^2"), ("gl2.toml", "GL2"), ("sl2_basis.toml", "SL2")];
    for (file, label) in pairs {
        let (code, mut a) = json(&["describe", "--group", &group_file(file)]);
        assert_eq!(code, 0, "{file}");
        let (_, mut b) = json(&["describe", "--group", label]);
        a["label"] = Value::Null;
        b["label"] = Value::Null;
        b["cartan_type"] = a["cartan_type"].clone();
        assert_eq!(a, b, "{file} vs {label}");
    }
    let (_, v) = json(&["describe", "--group", &group_file("unitary3.toml")]);
    assert_eq!(v["relative_weyl_order"], 2);
    assert_eq!(v["sigma_orbits"], serde_json::json!([[1, 2]]));
}

#[test]
fn tate_table_rows() {
    let (code, v) = json(&["tate-table"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    let find = |g: &str, c: &str| rows.iter().find(|r| r["group"] == g && r["coweight"] == c).unwrap().clone();
    let r = find("2D4", "w1");
    assert_eq!((r["dim"].as_u64(), r["tate_dim"].as_u64()), (Some(8), Some(2)));
    let r = find("3D4", "w1");
    assert_eq!((r["dim"].as_u64(), r["tate_dim"].as_u64()), (Some(8), Some(2)));
    let r = find("2A4", "w2");
    assert_eq!((r["dim"].as_u64(), r["tate_dim"].as_u64()), (Some(10), Some(2)));
    // the A1^{2g} rows carry the tabulated value next to the computed one
    let r = find("A1^2", "w");
    assert_eq!((r["dim"].as_u64(), r["tate_dim"].as_u64()), (Some(4), Some(2)));
    assert_eq!(r["expected"], serde_json::json!([2, 2]));
    assert!(r["discrepancy"].as_str().is_some());

    let (code, v) = json(&["tate-table", "--group", "2A4", "--dynkin", "--mu", "0,1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["tate_dim"], 2);
}

#[test]
fn adlv_for_unitary_four() {
    let (code, v) = json(&["adlv", "--group", "2A3", "--omega", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_v"], 6);
    assert_eq!(v["tate_dim"], 2);
    let basic = v["classes"].as_array().unwrap().iter().find(|c| c["basic"] == true).unwrap();
    assert_eq!(basic["components"].as_array().unwrap().len(), 2);
    // ½⟨2ρ, ω₂⟩ for A3
    assert_eq!(basic["dimension"], "2");
}

#[test]
fn generic_verdicts_set_exit_codes() {
    // the basic class of A2 with μ = ω₁ is not unramified
    assert_eq!(adlv(&["adlv", "--group", "A2", "--omega", "1"]).status.code(), Some(1));
    let (code, v) = json(&["generic", "--group", "U3", "--mu", "1,0,0", "--gamma", "2,5,2"]);
    assert_eq!(code, 1);
    assert_eq!(v["general"], false);
    let (code, _) = json(&["generic", "--group", "U3", "--mu", "1,0,0", "--gamma", "2,5,3"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["generic", "--group", "U3", "--mu", "1,0,0", "--gamma", "2,0,3"]);
    assert_eq!(code, 2);
}

#[test]
fn divisor_of_standard() {
    let (code, v) = json(&["divisor", "--group", "U3", "--mu", "1,0,0"]);
    assert_eq!(code, 0);
    let live: Vec<&Value> = v["factors"].as_array().unwrap().iter().filter(|f| f["zeta"] != 0).collect();
    assert_eq!(live.len(), 1);
    assert_eq!(live[0]["coroot"], serde_json::json!([1, 0, -1]));
}

#[test]
fn satake_products() {
    let out = adlv(&["satake", "--group", "GL2", "--q", "2", "--mu", "1,0", "--mu", "1,0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("element  T(2,0) + 3 T(1,1)"), "{text}");
    let (code, v) = json(&["satake", "--group", "GL3", "--q", "3", "--mu", "1,1,0", "--mu", "1,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["transform"]["w0_invariant"], true);
}

#[test]
fn errors_exit_two() {
    for args in [
        vec!["describe", "--group", "NOPE"],
        vec!["adlv", "--group", "2A3"],
        vec!["adlv", "--group", "2A3", "--mu", "1,0"],
        vec!["adlv", "--group", "A2", "--mu", "1,x"],
        vec!["satake", "--group", "2A3", "--q", "2", "--mu", "1,0"],
        vec!["satake", "--group", "GL2", "--q", "2", "--window", "2", "--mu", "2,0", "--mu", "1,0"],
    ] {
        let out = adlv(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn malformed_group_file_reports_line() {
    let dir = std::env::temp_dir().join(format!("adlv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(&path, "label = \"x\"\ncartan_type = \"A2\"\nsigma = [1, 1]\n").unwrap();
    let out = adlv(&["describe", "--group", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn output_is_deterministic() {
    let a = adlv(&["adlv", "--group", "2A2", "--dynkin", "--mu", "1,1", "--format", "json"]);
    let b = adlv(&["adlv", "--group", "2A2", "--dynkin", "--mu", "1,1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
