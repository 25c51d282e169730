// scaled-zx: exactly scaled stabilizer ZX-calculus
// Copyright 2026 The scaled-zx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::PathBuf;

use scaled_zx::cli::{run, EXIT_INVALID, EXIT_OK, EXIT_UNEQUAL, EXIT_USAGE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn zx(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zx").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn interpret_prints_exact_entries() {
    let (code, out, _) = zx(&["interpret", &data("bell.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("4x1 matrix, exact:\n[1/2ω - 1/2ω³]\n[0]\n[0]\n[1/2ω - 1/2ω³]\n"), "{out}");
    assert!(out.contains("sha256:"));

    let (_, out, _) = zx(&["interpret", &data("empty.json")]);
    assert!(out.contains("1x1 matrix, exact:\n[1]\n"));
    let (_, out, _) = zx(&["interpret", "--approx", &data("zero_pair.json")]);
    assert!(out.contains("[0]\n") && out.contains("not authoritative"));
}

#[test]
fn normalize_each_kind() {
    let (code, out, _) = zx(&["normalize", "--kind", "scalar", &data("halfscalar.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("scalar 1\n"), "{out}");
    assert!(out.contains("halfscalar forward"));

    let (code, out, _) = zx(&["normalize", "--kind", "zero", &data("zero_wire.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("zero(1, 1)\n"));

    let (code, _, err) = zx(&["normalize", "--kind", "zero", &data("bell.json")]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("not zero"));

    let (code, out, _) = zx(&["normalize", "--kind", "gslc", &data("z_state.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("gslc 0 1\nlocal 0 Z(0)·X(0)·Z(0)\nscalar 1\n"), "{out}");
}

#[test]
fn eq_exit_codes() {
    let (code, out, _) = zx(&["eq", &data("hzh.json"), &data("x_gate.json")]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("\nequal\n"));
    let (code, _, _) = zx(&["eq", &data("hzh.json"), &data("cnot.json")]);
    assert_eq!(code, EXIT_UNEQUAL);
    let (code, _, _) = zx(&["eq", &data("hzh.json")]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn bad_input_is_reported() {
    let dir = std::env::temp_dir().join(format!("zx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"nodes": [{"id": "z", "kind": "Z", "phase": "pi/3"}]}"#).unwrap();
    let (code, _, err) = zx(&["interpret", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("pi/3"), "{err}");
    let (code, _, _) = zx(&["interpret", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = zx(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn render_formats() {
    let (code, out, _) = zx(&["render", "--format", "dot", &data("bell.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph zx {") && out.contains("out0 -- out1;"));
    let (_, out, _) = zx(&["render", "--format", "dot", &data("empty.json")]);
    assert_eq!(out, "graph zx {\n}\n");
    let (_, out, _) = zx(&["render", "--format", "tikz", &data("bell.json")]);
    assert!(out.contains("\\begin{tikzpicture}"));
}

#[test]
fn demo_and_rules() {
    let (code, out, _) = zx(&["demo", "bb84"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("= 1/2\n").count(), 2);
    assert_eq!(out.matches("= 1/4\n").count(), 4);
    assert_eq!(out.matches("amplitude zero(0, 0)").count(), 2);

    let (code, out, _) = zx(&["verify-rules", "--legs", "2"]);
    assert_eq!(code, EXIT_OK);
    let star = out.lines().find(|l| l.starts_with("star ")).unwrap();
    assert!(star.split_whitespace().nth(2) == Some("1") && star.ends_with("sound"), "{star}");
    let (_, out, _) = zx(&["verify-rules", "--include-negative-controls"]);
    assert!(out.contains("copy-unscaled") && out.contains("rejected"));
}

#[test]
fn reports_are_deterministic_and_json_parses() {
    let a = zx(&["--json", "eq", &data("hzh.json"), &data("x_gate.json")]).1;
    let b = zx(&["--json", "eq", &data("hzh.json"), &data("x_gate.json")]).1;
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["command"], "eq");
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
}
