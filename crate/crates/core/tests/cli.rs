use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn singmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singmap"))
        .args(args)
        .env_remove("SINGMAP_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn classify_lens() {
    let out = singmap(&["classify", "--lens", "5,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["group"]["family"], "cyclic");
    assert_eq!(v["group"]["order"], 5);
    assert_eq!(v["singularity"]["multiplicity"], 3);
    assert_eq!(v["singularity"]["embedding_dimension"], 4);
    assert_eq!(v["singularity"]["rational"], true);
    assert_eq!(v["is_image_of_finite_map"], true);
    assert!(v.get("map").is_none());
}

#[test]
fn classify_e8() {
    let out = singmap(&["classify", "--seifert", "2;(2,1)(3,2)(5,4)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["group"], serde_json::json!({"family": "I*", "m": 1, "order": 120}));
    assert_eq!(v["singularity"]["multiplicity"], 2);
    assert_eq!(v["singularity"]["embedding_dimension"], 3);
}

#[test]
fn rejections_and_exit_codes() {
    let out = singmap(&["classify", "--seifert", "1;(2,1)(2,1)(2,1)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not negative definite"));

    let out = singmap(&["classify", "--seifert", "2;(2,1)(3,1)(7,1)"]);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["is_image_of_finite_map"], false);
    assert_eq!(v["family"]["name"], "not_finite");

    assert_eq!(singmap(&["map", "--seifert", "2;(2,1)(2,1)(3,1)"]).status.code(), Some(5));
    assert_eq!(singmap(&["classify", "--lens", "6,4"]).status.code(), Some(2));
    assert_eq!(singmap(&["classify", "--seifert", "2;(2,1)(3"]).status.code(), Some(2));
    assert_eq!(singmap(&["classify"]).status.code(), Some(2));
    assert_eq!(singmap(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn map_examples() {
    let v = json(&singmap(&["map", "--lens", "3,2"]));
    assert_eq!(v["map"]["map"], "F(u,v) = (u^3, u*v, v^3)");
    assert_eq!(v["relations"]["relations"], serde_json::json!(["x1*x3 - x2^3"]));

    let v = json(&singmap(&["map", "--lens", "1,0"]));
    assert_eq!(v["map"]["map"], "F(u,v) = (u, v)");
    assert_eq!(v["relations"]["relations"], serde_json::json!([]));

    let v = json(&singmap(&["map", "--seifert", "2;(2,1)(3,2)(5,4)"]));
    assert_eq!(v["relations"]["relations"], serde_json::json!(["27*x1^5 + 25*s5*x2^3 + 4*x3^2"]));
}

#[test]
fn max_degree_and_cap() {
    let v = json(&singmap(&["map", "--seifert", "2;(2,1)(3,2)(5,4)", "--max-degree", "40"]));
    assert_eq!(v["relations"]["degree_bound"], 40);
    assert_eq!(v["relations"]["relations"], serde_json::json!([]));

    let out = Command::new(env!("CARGO_BIN_EXE_singmap"))
        .args(["map", "--seifert", "2;(2,1)(3,2)(5,4)"])
        .env("SINGMAP_DEGREE_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(json(&out)["relations"]["degree_bound"], 30);
}

#[test]
fn graph_input_from_file_and_stdin() {
    // the E8 tree, centre first
    let body = r#"{"graph": {"weights": [-2,-2,-2,-2,-2,-2,-2,-2],
                   "edges": [[0,1],[0,2],[2,3],[0,4],[4,5],[5,6],[6,7]]}}"#;
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(body.as_bytes()).unwrap();
    let out = singmap(&["classify", "--graph", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["group"]["family"], "I*");

    let mut child = Command::new(env!("CARGO_BIN_EXE_singmap"))
        .args(["classify", "--graph", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"lens": [7, 3]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["singularity"]["embedding_dimension"], 4);

    let out = singmap(&["classify", "--graph", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_report_draws_the_graph() {
    let out = singmap(&["classify", "--seifert", "2;(2,1)(3,2)(5,4)", "--text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("plumbing graph:"));
    assert!(text.contains("    [1] -2"), "{text}");
    assert!(text.contains("multiplicity: 2"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = singmap(&["map", "--seifert", "3;(2,1)(2,1)(2,1)", "--json"]).stdout;
    let b = singmap(&["map", "--seifert", "3;(2,1)(2,1)(2,1)", "--json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn verify_suites() {
    for (suite, total) in [("ade-equations", 4), ("group-orders", 4), ("cyclic-table", 14)] {
        let out = singmap(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let v = json(&out);
        assert_eq!(v["passed"], total);
        assert_eq!(v["total"], total);
    }
    let out = singmap(&["verify", "--suite", "invariance", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("negative control"));
}
