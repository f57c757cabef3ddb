// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end runs of the `chromatic-critic` binary.

use chromatic_critic::graph::{encode_graph6, generate, Family, Graph};
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn cc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromatic-critic")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn analyze_triangle() {
    let out = cc(&["analyze", "--graph6", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    let g = &json(&out)["graphs"][0];
    assert_eq!((g["delta"].as_u64(), g["chi_prime"].as_u64()), (Some(2), Some(3)));
    assert_eq!(g["critical"], Value::Bool(true));
}

#[test]
fn pipeline_on_petersen_reports_the_failed_premise() {
    let out = cc(&["pipeline", "--in", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let stages = &json(&out)["reports"][0]["stages"];
    assert_eq!(stages[0]["stage"], "degree_premise");
    assert_eq!(stages[0]["verdict"], "PREMISE_UNSATISFIED");
    assert_eq!(stages.as_array().unwrap().len(), 8);
}

#[test]
fn verify_small_corpus_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("report.json");
    let out = cc(&["verify", "--lemmas", "1,2,3", "--nmax", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = read(&path);
    assert_eq!(report["summary"]["graphs"], 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    assert!(report["summary"]["verdicts"].get("VIOLATED").is_none());
    let csv = std::fs::read_to_string(path.with_extension("csv")).unwrap();
    assert!(csv.starts_with("graph6,lemma,params,verdict"));
    assert_eq!(csv.lines().count() as u64, 1 + report["summary"]["reports"].as_u64().unwrap());
}

#[test]
fn violation_exits_two() {
    // the circumference formula undercounts on a triangle plus an isolated vertex
    let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let out = cc(&["verify", "--lemmas", "circumference", "--graph6", &encode_graph6(&g).unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["reports"][0]["verdict"], "VIOLATED");
}

#[test]
fn exhausted_budget_exits_three() {
    let out = cc(&["analyze", "--in", "petersen", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(cc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cc(&["verify"]).status.code(), Some(1));
    assert_eq!(cc(&["verify", "--in", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(cc(&["verify", "--nmax", "9"]).status.code(), Some(1));
    assert_eq!(cc(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_lines_are_fatal_unless_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("corpus.g6");
    std::fs::write(&file, "Bw\nnot-graph6\nDQc\n").unwrap();
    let f = file.to_str().unwrap();
    let out = cc(&["analyze", "--in", f]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
    let out = cc(&["analyze", "--in", f, "--skip-bad"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["graphs"].as_array().unwrap().len(), 2);
}

#[test]
fn corpus_lists_odd_cycles() {
    let out = cc(&["corpus", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["summary"]["degree_sum_below"], 0);
    // odd cycles have d(x) + d(y) = Δ + 2 on every edge
    assert!(report["summary"]["degree_sum_tight"].as_u64().unwrap() >= 2);
    let keys: Vec<String> =
        report["entries"].as_array().unwrap().iter().map(|e| e["graph6"].as_str().unwrap().to_string()).collect();
    for f in [Family::Cycle(3), Family::Cycle(5)] {
        let g = generate(&f).unwrap();
        let canon = chromatic_critic::graph::canonical_form(&g);
        assert!(keys.iter().any(|k| {
            let h = chromatic_critic::graph::parse_graph6(k.as_bytes()).unwrap();
            chromatic_critic::graph::canonical_form(&h) == canon
        }));
    }
}

#[test]
fn closure_of_k4_minus_an_edge() {
    let g = generate(&Family::Complete(4)).unwrap().without_edge(0, 1);
    let out = cc(&["closure", "--graph6", &encode_graph6(&g).unwrap()]);
    let row = &json(&out)["graphs"][0];
    assert_eq!(row["added"].as_array().unwrap().len(), 1);
    assert_eq!(row["complete"], Value::Bool(true));
}

#[test]
fn reports_are_byte_identical_across_runs_and_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for workers in ["1", "4"] {
        let path = dir.path().join(format!("r{workers}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_chromatic-critic"))
            .args(["verify", "--nmax", "6", "--seed", "11", "--out", path.to_str().unwrap()])
            .env("CC_WORKERS", workers)
            .status()
            .unwrap();
        assert!(status.code().is_some());
        bytes.push((std::fs::read(&path).unwrap(), std::fs::read(path.with_extension("csv")).unwrap()));
    }
    assert!(bytes[0] == bytes[1]);
}
