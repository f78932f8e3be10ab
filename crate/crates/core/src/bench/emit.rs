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

//! Report files: CSV table, JSON mirror, edge statistics, DOT graphs and a
//! plotting script.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{ArchiveMetadata, BenchConfig, BenchError, BenchOutput, ResultsArchive};
use crate::code::Logical;
use crate::decode::{DecoderKind, LogicalErrorReport};
use crate::stats::Summary;

pub const REPORT_FORMAT_VERSION: u32 = 1;
pub const CSV_HEADER: &str = "n,label,P,shots";

/// Shortest round-trip rendering of `x`, always with a decimal point for
/// finite values (`0` becomes `0.0`).
pub fn format_float(x: f64) -> String {
    let s = x.to_string();
    if x.is_finite() && !s.contains('.') {
        s + ".0"
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub label: Logical,
    #[serde(rename = "P")]
    pub probability: f64,
    pub shots: u64,
    pub misdecoded: u64,
    pub ties: u64,
    pub decoder: DecoderKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format_version: u32,
    pub config: Option<BenchConfig>,
    pub rows: Vec<ReportRow>,
}

/// One row per code size and encoded value, ordered as given.
pub fn report_rows<'a>(
    reports: impl IntoIterator<Item = (usize, &'a LogicalErrorReport)>,
) -> Vec<ReportRow> {
    reports
        .into_iter()
        .flat_map(|(n, report)| {
            report
                .labels
                .iter()
                .map(move |(&label, outcome)| ReportRow {
                    n,
                    label,
                    probability: outcome.probability,
                    shots: outcome.shots,
                    misdecoded: outcome.misdecoded,
                    ties: outcome.ties,
                    decoder: report.decoder,
                })
        })
        .collect()
}

pub fn reports_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.n,
            row.label,
            format_float(row.probability),
            row.shots
        ));
    }
    out
}

pub fn reports_json(config: Option<&BenchConfig>, rows: &[ReportRow]) -> String {
    let file = ReportFile {
        format_version: REPORT_FORMAT_VERSION,
        config: config.cloned(),
        rows: rows.to_vec(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("report serialization cannot fail");
    text.push('\n');
    text
}

/// Edge-probability summaries, one block per code size.
pub fn edge_stats_text<'a>(summaries: impl IntoIterator<Item = (usize, &'a Summary)>) -> String {
    summaries
        .into_iter()
        .map(|(n, summary)| format!("n = {n}\n{summary}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// A matplotlib script that plots `csv_name` on a log scale.
pub fn plot_script(csv_name: &str) -> String {
    format!(
        r#"# Plots logical error probability against code size.
import csv
import matplotlib.pyplot as plt

rows = list(csv.DictReader(open("{csv_name}")))
for label in ("0", "1"):
    points = [(int(r["n"]), float(r["P"])) for r in rows if r["label"] == label]
    plt.scatter([n for n, _ in points], [p for _, p in points], label="encoded " + label)
plt.yscale("log")
plt.xlabel("Code distance, n")
plt.ylabel("Logical error probability")
plt.legend()
plt.savefig("logical_error.png")
"#
    )
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmitOptions {
    /// Write `graph_n{n}.dot` for each code size.
    pub dot: bool,
    /// Write `plot_logical_error.py`.
    pub plot_script: bool,
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), BenchError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| BenchError::Io {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    fs::write(path, contents).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes every output of a benchmark run into `dir` and returns the paths
/// written, in order.
pub fn emit_reports(
    dir: &Path,
    output: &BenchOutput,
    options: EmitOptions,
) -> Result<Vec<PathBuf>, BenchError> {
    if output.runs.is_empty() {
        return Err(BenchError::Validation("no reports to emit".into()));
    }
    let rows = report_rows(output.runs.iter().map(|r| (r.n, &r.report)));
    let mut files: Vec<(PathBuf, String)> = vec![
        (dir.join("archive.json"), output.archive.to_json()),
        (dir.join("results.csv"), reports_csv(&rows)),
        (
            dir.join("results.json"),
            reports_json(Some(&output.config), &rows),
        ),
        (
            dir.join("edge_stats.txt"),
            edge_stats_text(output.runs.iter().map(|r| (r.n, &r.edge_summary))),
        ),
    ];
    if output.runs.iter().any(|r| r.table.is_some()) {
        let mut tables = ResultsArchive::new(ArchiveMetadata {
            created: output.archive.metadata.created.clone(),
            source: "simulator lookup table".into(),
            config: Some(output.config.clone()),
        });
        for run in &output.runs {
            if let Some(table) = &run.table {
                tables.insert(run.n, run.rounds, table.clone())?;
            }
        }
        files.push((dir.join("table.json"), tables.to_json()));
    }
    if options.dot {
        for run in &output.runs {
            files.push((
                dir.join(format!("graph_n{}.dot", run.n)),
                run.weighted_graph.to_dot(),
            ));
        }
    }
    if options.plot_script {
        files.push((
            dir.join("plot_logical_error.py"),
            plot_script("results.csv"),
        ));
    }
    for (path, contents) in &files {
        write_file(path, contents)?;
    }
    Ok(files.into_iter().map(|(path, _)| path).collect())
}
