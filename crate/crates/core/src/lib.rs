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

//! Repetition-code error correction benchmarking on a bit-level noisy
//! simulator.
//!
//! The pipeline runs: build a [`code::RepetitionCode`], sample its two
//! circuits with [`sim::sample`], convert raw outcomes into processed
//! strings, build a [`graph::SyndromeGraph`] from single-fault injection, and
//! decode with a lookup table or exact minimum-weight matching.

pub mod bench;
pub mod code;
pub mod decode;
pub mod graph;
pub mod sim;
pub mod stats;

pub use code::{Layout, Logical, ProcessedResults, RawResults, RepetitionCode};
pub use decode::{
    analytic_majority, lookup_decode, matching_decode, mwpm, LogicalErrorReport, MatchingDecoder,
};
pub use graph::{weight_syndrome_graph, SyndromeGraph};
pub use sim::{run_ideal, run_with_errors, sample, Counts, NoiseModel};
pub use stats::Summary;
