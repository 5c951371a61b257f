use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use multilayer_order_cli::formats::LayerFile;

fn mlorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlorder")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const G: &str = r#"{"nodes":[1,2,3],"edges":[
  {"u":1,"v":2,"mult":3,"colors":["blue","red"]},
  {"u":2,"v":3,"mult":1,"colors":["blue"]}],
  "colorUniverse":["blue","green","red","yellow"]}"#;
const H: &str = r#"{"nodes":[1,2,3,4],"edges":[
  {"u":1,"v":2,"mult":1,"colors":["green"]},
  {"u":1,"v":3,"mult":1,"colors":["yellow"]},
  {"u":3,"v":4,"mult":2,"colors":["yellow","green"]}],
  "colorUniverse":["blue","green","red","yellow"]}"#;

#[test]
fn enumerate_reports_count() {
    let o = mlorder(&["enumerate", "--k", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 75);
    assert_eq!(v["patterns"].as_array().unwrap().len(), 75);
}

#[test]
fn enumerate_respects_cap() {
    let o = mlorder(&["enumerate", "--k", "6", "--cap", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn order_verdicts() {
    assert_eq!(stdout(&mlorder(&["order", "2*1*3", "1.2*3"])).trim(), "LESS");
    assert_eq!(stdout(&mlorder(&["order", "1.2*3", "2*1*3"])).trim(), "GREATER");
    assert_eq!(stdout(&mlorder(&["order", "1.2*3", "1*2.3"])).trim(), "INCOMPARABLE");
    assert_eq!(stdout(&mlorder(&["order", "2.1*3", "1.2*3"])).trim(), "EQUAL");
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(mlorder(&["order", "1**2", "1*2"]).status.code(), Some(2));
    assert_eq!(mlorder(&["order", "1*2", "1*3"]).status.code(), Some(2));
    assert_eq!(mlorder(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(mlorder(&["check", "poset", "--k", "9"]).status.code(), Some(2));
}

#[test]
fn check_all_passes() {
    let o = mlorder(&["check", "all", "--k", "3", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["seed"], 5);
}

#[test]
fn hasse_json_and_dot() {
    let dot = stdout(&mlorder(&["hasse", "--k", "3"]));
    assert!(dot.starts_with("digraph hasse_k3"));
    assert_eq!(dot.matches(" -> ").count(), 18);
    let o = mlorder(&["hasse", "--k", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 13);
    assert_eq!(v["leq"].as_array().unwrap().len(), 18);
}

#[test]
fn merge_and_realize_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", G);
    let h = write(dir.path(), "h.json", H);
    let out = dir.path().join("m.json");
    let o = mlorder(&["merge", &g, &h, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let merged: LayerFile = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(merged.nodes, [1, 2, 3, 4]);
    let e12 = merged.edges.iter().find(|e| (e.u, e.v) == (1, 2)).unwrap();
    assert_eq!(e12.mult, 4);
    assert_eq!(e12.colors, ["blue", "green", "red"]);

    let o = mlorder(&["realize", "2*1", &g, &h]);
    let parts: Vec<LayerFile> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0].nodes, [1, 2, 3, 4]);
    assert_eq!(parts[1].nodes, [1, 2, 3]);
    let o = mlorder(&["realize", "1.2", &g, &h]);
    let parts: Vec<LayerFile> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(parts, [merged]);
}

#[test]
fn invalid_layer_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"nodes":[1],"edges":[{"u":1,"v":2,"mult":1,"colors":["a"]}],"colorUniverse":["a"]}"#,
    );
    let o = mlorder(&["merge", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.json"));
}

#[test]
fn layer_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let o = mlorder(&["random-layer", "--seed", "42", "--out", first.to_str().unwrap()]);
    assert!(o.status.success());
    let a = fs::read_to_string(&first).unwrap();
    let b = stdout(&mlorder(&["merge", first.to_str().unwrap()]));
    assert_eq!(a, b);
    assert_eq!(a, stdout(&mlorder(&["random-layer", "--seed", "42"])));
}

#[test]
fn ideals_set_witness() {
    let o = mlorder(&["ideals", "v2", "--k", "3", "--set", "3*1.2,2.3*1,3*1*2,3*2*1,2*3*1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["isIdeal"], false);
    let o = mlorder(&["ideals", "v1", "--k", "3", "--set", "3*1*2,3*2*1,3*1.2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["isIdeal"], true);
    let o = mlorder(&["ideals", "v2", "--k", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 13);
}

#[test]
fn poset_command_classifies_map() {
    let dir = tempfile::tempdir().unwrap();
    let chain = write(dir.path(), "chain.json", r#"{"elements":["a","b","c"],"leq":[[0,1],[1,2]]}"#);
    let o = mlorder(&["poset", &chain, "--map", "2:1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bottom"], 0);
    assert_eq!(v["top"], 2);
    assert_eq!(v["monotone"], true);
    assert_eq!(v["interior"], true);
    assert_eq!(v["closure"], false);
}
