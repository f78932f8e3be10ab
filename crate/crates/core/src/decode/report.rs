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

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::Logical;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecoderKind {
    Lookup,
    Matching,
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecoderKind::Lookup => "lookup",
            DecoderKind::Matching => "matching",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelOutcome {
    /// `(misdecoded + ties / 2) / shots`
    pub probability: f64,
    pub shots: u64,
    pub misdecoded: u64,
    pub ties: u64,
}

impl LabelOutcome {
    pub fn new(misdecoded: u64, ties: u64, shots: u64) -> Self {
        let probability = if shots == 0 {
            0.0
        } else {
            (misdecoded as f64 + ties as f64 / 2.0) / shots as f64
        };
        Self {
            probability,
            shots,
            misdecoded,
            ties,
        }
    }
}

/// Logical error probability per encoded value for one decoder.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogicalErrorReport {
    pub decoder: DecoderKind,
    pub labels: BTreeMap<Logical, LabelOutcome>,
}

impl LogicalErrorReport {
    pub fn probability(&self, label: Logical) -> Option<f64> {
        self.labels.get(&label).map(|o| o.probability)
    }
}
