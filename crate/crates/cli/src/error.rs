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

use repcode::bench::BenchError;
use repcode::decode::DecodeError;
use thiserror::Error;

/// Process exit codes. Usage errors (2) are reported by the argument parser.
pub mod exit {
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
    pub const PARSE: u8 = 4;
    pub const VALIDATION: u8 = 5;
    pub const DECODE: u8 = 6;
    pub const GRAPH: u8 = 7;
    pub const CONFIG: u8 = 8;
    pub const LAYOUT_CHECK: u8 = 9;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("layout check failed: {0}")]
    LayoutCheck(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Bench(err) => match err {
                BenchError::Io { .. } => exit::IO,
                BenchError::Parse { .. } => exit::PARSE,
                BenchError::Validation(_) | BenchError::Code(_) | BenchError::Sim(_) => {
                    exit::VALIDATION
                }
                BenchError::Decode { source, .. } => match source.root() {
                    DecodeError::Layout(_) => exit::VALIDATION,
                    DecodeError::Graph(_) => exit::GRAPH,
                    _ => exit::DECODE,
                },
                BenchError::Graph(_) => exit::GRAPH,
                BenchError::Config(_) => exit::CONFIG,
            },
            CliError::LayoutCheck(_) => exit::LAYOUT_CHECK,
            CliError::Usage(_) => exit::USAGE,
        }
    }
}
