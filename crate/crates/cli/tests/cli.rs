use std::io::Write;
use std::process::{Command, Output};

fn jordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = jordan(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn builtin_transpose_passes() {
    let (code, v) = json(&["verify-identities", "m2", "transpose"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "jr-identities"));
}

#[test]
fn corrupted_map_exits_one_with_pair() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // transpose with the e22 column doubled
    write!(
        f,
        r#"{{"domain":"M2","codomain":"M2","matrix":[["1","0","0","0"],["0","0","1","0"],["0","1","0","0"],["0","0","0","2"]]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (code, v) = json(&["verify-identities", "m2", path]);
    assert_eq!(code, 1);
    let jordan = &v["checks"][0];
    assert_eq!(jordan["name"], "jordan");
    assert_eq!(jordan["passed"], false);
    assert_eq!(jordan["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(jordan(&["verify-identities", "m2", "/nonexistent/map.json"]).status.code(), Some(2));
    assert_eq!(jordan(&["verify-identities", "nope", "identity"]).status.code(), Some(2));
    assert_eq!(jordan(&["decompose", "m2", "reversion"]).status.code(), Some(2));
    assert_eq!(jordan(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(jordan(&["tideal", "x1 +* x2", "m2"]).status.code(), Some(2));
}

#[test]
fn decompose_swap_transpose() {
    let (code, v) = json(&["decompose", "m2xm2", "swap-transpose"]);
    assert_eq!(code, 0);
    assert_eq!(v["values"]["epsilon"], "(e11,0) + (e22,0)");
    assert_eq!(v["values"]["candidates"], 4);
}

#[test]
fn grassmann_demo_prints_obstruction() {
    let out = jordan(&["grassmann-demo", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("obstruction: 8*e1e2e3e4"), "{text}");
    assert_eq!(jordan(&["grassmann-demo", "3"]).status.code(), Some(1));
}

#[test]
fn tideal_dimensions() {
    let (_, v) = json(&["tideal", "hall", "m2"]);
    assert_eq!(v["values"]["dimension"], 0);
    let (_, v) = json(&["tideal", "hall", "m3"]);
    assert!(v["values"]["dimension"].as_u64().unwrap() > 0);
    let (_, v) = json(&["tideal", "comm", "ut2"]);
    assert_eq!(v["values"]["dimension"], 1);
}

#[test]
fn pe2_demo_small() {
    let (code, v) = json(&["pe2-demo", "--max-length", "4"]);
    assert_eq!(code, 0, "{v}");
    let w = &v["checks"][0]["witness"];
    assert_eq!(w[0], "abbc");
    assert_eq!(w[1], "cbba");
    let obstruction = v["values"]["obstruction"].as_str().unwrap();
    assert!(obstruction.ends_with('z'), "{obstruction}");
    // too short for a witness of length 4
    let (code, _) = json(&["pe2-demo", "--max-length", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn congruence_counts_and_presentation_file() {
    let (code, v) = json(&["congruence", "commutative", "--max-length", "5"]);
    assert_eq!(code, 0);
    let classes = v["values"]["classes"].as_array().unwrap();
    for (l, c) in classes.iter().enumerate() {
        assert_eq!(c["classes"], l + 2);
    }
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "letters: x y\nrelations: (x y^n, y^n x) for n>=1").unwrap();
    let (code, v) = json(&["congruence", f.path().to_str().unwrap(), "--max-length", "4"]);
    assert_eq!(code, 0, "{v}");
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "letters: x y\nrelations: (x y, y)").unwrap();
    assert_eq!(jordan(&["congruence", bad.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn same_seed_same_report() {
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    let a = strip(json(&["--seed", "7", "verify-identities", "g4", "examb"]).1);
    let b = strip(json(&["--seed", "7", "verify-identities", "g4", "examb"]).1);
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
}

#[test]
fn validate_and_cfin() {
    assert_eq!(jordan(&["validate", "m2xm2"]).status.code(), Some(0));
    assert_eq!(jordan(&["cfin", "ut2", "--element", "e11"]).status.code(), Some(0));
    assert_eq!(jordan(&["cfin", "m2"]).status.code(), Some(1));
    assert_eq!(jordan(&["cfin", "ut2", "--element", "e99"]).status.code(), Some(2));
}
