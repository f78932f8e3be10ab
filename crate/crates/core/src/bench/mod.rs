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

//! Benchmark harness: sweep code sizes, persist results, emit reports.

mod archive;
mod config;
mod dict_literal;
mod emit;
mod run;

pub use archive::{ArchiveEntry, ArchiveMetadata, ResultsArchive, ARCHIVE_FORMAT_VERSION};
pub use config::{BenchConfig, SeedPurpose, Weighting};
pub use dict_literal::{
    ingest_dict_literal, parse_dict_literal, to_dict_literal, Entry, Key, Position, Value,
};
pub use emit::{
    edge_stats_text, emit_reports, format_float, plot_script, report_rows, reports_csv,
    reports_json, write_file, EmitOptions, ReportFile, ReportRow, CSV_HEADER,
    REPORT_FORMAT_VERSION,
};
pub use run::{bench_run, decode_results, sample_code, BenchOutput, CodeSizeRun, DecodeOptions};

use std::path::PathBuf;

use thiserror::Error;

use crate::code::CodeError;
use crate::decode::DecodeError;
use crate::graph::GraphError;
use crate::sim::SimError;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid results: {0}")]
    Validation(String),
    #[error("decoding n={n}: {source}")]
    Decode {
        n: usize,
        #[source]
        source: DecodeError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Sim(#[from] SimError),
}
