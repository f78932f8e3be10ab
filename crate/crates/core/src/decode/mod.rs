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

//! Decoders and logical error probabilities.

mod analytic;
mod lookup;
mod matching;
mod mwpm;
mod report;

pub use analytic::{analytic_majority, binomial};
pub use lookup::{lookup_decode, lookup_decode_outcome};
pub use matching::{matching_decode, MatchingDecoder};
pub use mwpm::{mwpm, Matching, DEFAULT_MAX_DEFECTS};
pub use report::{DecoderKind, LabelOutcome, LogicalErrorReport};

use thiserror::Error;

use crate::code::CodeError;
use crate::graph::GraphError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecodeError {
    #[error("majority vote needs an odd number of repetitions (got {0})")]
    EvenRepetitions(usize),
    #[error("{0} is not a probability")]
    InvalidProbability(f64),
    #[error("cannot pair an odd number ({0}) of defects")]
    OddDefects(usize),
    #[error("{defects} defects exceed the exact matching limit of {limit}")]
    Capacity { defects: usize, limit: usize },
    #[error("node {node} is outside a graph of {size} nodes")]
    UnknownNode { node: usize, size: usize },
    #[error("lookup table holds no outcomes")]
    EmptyTable,
    #[error("no results to decode")]
    EmptyResults,
    #[error("while decoding '{string}': {source}")]
    AtString {
        string: String,
        #[source]
        source: Box<DecodeError>,
    },
    #[error(transparent)]
    Layout(#[from] CodeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl DecodeError {
    pub(crate) fn at(self, string: &str) -> Self {
        DecodeError::AtString {
            string: string.to_string(),
            source: Box::new(self),
        }
    }

    /// The innermost error, skipping string context.
    pub fn root(&self) -> &DecodeError {
        match self {
            DecodeError::AtString { source, .. } => source.root(),
            other => other,
        }
    }
}
