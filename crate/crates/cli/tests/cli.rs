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

//! End-to-end behavior of the `repcode` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn repcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn noiseless_bench_prints_zero_probabilities() {
    let out = repcode(&["bench", "--shots", "100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,label,P,shots\n3,0,0.0,100\n3,1,0.0,100\n");
}

#[test]
fn bench_writes_every_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let out = repcode(&[
        "bench",
        "--decoder",
        "lookup",
        "--rho-meas",
        "0.05",
        "--rho-gate",
        "0.05",
        "--shots",
        "200",
        "--table-shots",
        "500",
        "--dot",
        "--plot-script",
        "--layout-check",
        "--out",
        path(&out_dir),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    for name in [
        "archive.json",
        "table.json",
        "results.csv",
        "results.json",
        "edge_stats.txt",
        "graph_n3.dot",
        "plot_logical_error.py",
    ] {
        assert!(out_dir.join(name).is_file(), "{name}");
    }
    let stats = fs::read_to_string(out_dir.join("edge_stats.txt")).unwrap();
    assert!(stats.starts_with("n = 3\ncount: 9\nmean: "), "{stats}");

    // Stored results decode to the same table.
    let decoded = repcode(&[
        "decode",
        "--archive",
        path(&out_dir.join("archive.json")),
        "--decoder",
        "lookup",
        "--table",
        path(&out_dir.join("table.json")),
    ]);
    assert_eq!(code(&decoded), 0);
    assert_eq!(
        stdout(&decoded),
        fs::read_to_string(out_dir.join("results.csv")).unwrap()
    );
}

#[test]
fn timestamp_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let plain = dir.path().join("plain");
    let stamped = dir.path().join("stamped");
    assert_eq!(
        code(&repcode(&["bench", "--shots", "10", "--out", path(&plain)])),
        0
    );
    assert_eq!(
        code(&repcode(&[
            "bench",
            "--shots",
            "10",
            "--timestamp",
            "--out",
            path(&stamped)
        ])),
        0
    );
    let plain = fs::read_to_string(plain.join("archive.json")).unwrap();
    let stamped = fs::read_to_string(stamped.join("archive.json")).unwrap();
    assert!(plain.contains("\"created\": null"));
    assert!(stamped.contains("\"created\": \"unix:"));
}

#[test]
fn process_strings_and_archives() {
    let out = repcode(&["process", "111 00 10", "000 00 01"]);
    assert_eq!(stdout(&out), "1 1  10 10 00\n0 0  01 01 00\n");

    let dir = tempfile::tempdir().unwrap();
    let literal = dir.path().join("raw.txt");
    fs::write(&literal, "{3: {'0': {'000 00 01': 4}}}").unwrap();
    let archive = dir.path().join("raw.json");
    let ingest = repcode(&[
        "ingest",
        path(&literal),
        "--format",
        "dict-literal",
        "--out",
        path(&archive),
    ]);
    assert_eq!(code(&ingest), 0);
    let out = repcode(&["process", "--archive", path(&archive)]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["3"]["0"]["0 0  01 01 00"], 4);
}

#[test]
fn decode_single_string() {
    let out = repcode(&[
        "decode",
        "--processed",
        "0 0  0110 0000 0000",
        "--n",
        "5",
        "--rounds",
        "2",
    ]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn graph_exports() {
    let dot = repcode(&["graph", "--n", "3", "--export", "dot"]);
    assert!(stdout(&dot).starts_with("graph syndrome_n3_t1 {"));
    let json = repcode(&["graph", "--n", "3", "--rounds", "2"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 8);
}

#[test]
fn ingest_converts_between_formats() {
    let dir = tempfile::tempdir().unwrap();
    let literal = dir.path().join("raw.txt");
    let text = "{3: {'0': {'000 00': 1000, '001 01': 24}, '1': {'111 00': 1024}}}";
    fs::write(&literal, text).unwrap();
    let json = dir.path().join("raw.json");
    assert_eq!(
        code(&repcode(&[
            "ingest",
            path(&literal),
            "--format",
            "dict-literal",
            "--out",
            path(&json)
        ])),
        0
    );
    let back = repcode(&["ingest", path(&json), "--to", "dict-literal"]);
    assert_eq!(stdout(&back), format!("{text}\n"));
}

#[test]
fn failures_have_distinct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p
    };
    let syntax = write("syntax.txt", "{3: {'0' {'000 00': 1}}}");
    let layout = write("layout.txt", "{3: {'0': {'000 0': 1}}}");
    let missing = dir.path().join("missing.json");

    assert_eq!(code(&repcode(&["bench", "--no-such-flag"])), 2);
    assert_eq!(code(&repcode(&["ingest", path(&missing)])), 3);
    let parse = repcode(&["ingest", path(&syntax), "--format", "dict-literal"]);
    assert_eq!(code(&parse), 4);
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 1, column 10"));
    let invalid = repcode(&["ingest", path(&layout), "--format", "dict-literal"]);
    assert_eq!(code(&invalid), 5);
    assert!(String::from_utf8_lossy(&invalid.stderr).contains("'000 0'"));
    let capacity = repcode(&[
        "bench",
        "--n-min",
        "7",
        "--n-max",
        "7",
        "--rounds",
        "2",
        "--rho-meas",
        "0.3",
        "--rho-gate",
        "0.3",
        "--shots",
        "50",
        "--max-defects",
        "2",
    ]);
    assert_eq!(code(&capacity), 6);
    assert!(String::from_utf8_lossy(&capacity.stderr).contains("n=7"));
    assert_eq!(
        code(&repcode(&["bench", "--n-min", "5", "--n-max", "3"])),
        8
    );
    assert_eq!(
        code(&repcode(&[
            "decode",
            "--processed",
            "0 0  0",
            "--n",
            "3",
            "--rounds",
            "1"
        ])),
        5
    );
}
