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

use rayon::prelude::*;

use super::mwpm::{mwpm, DEFAULT_MAX_DEFECTS};
use super::{DecodeError, DecoderKind, LabelOutcome, LogicalErrorReport};
use crate::code::{Logical, ProcessedResults};
use crate::graph::{all_pairs_distances, DistanceTable, SyndromeGraph};

/// Two-hypothesis matching decoder.
///
/// For each candidate value `h` the logical characters that differ from `h`
/// and the syndrome characters that are `1` form the defect set. The value
/// whose minimum-weight matching is cheaper wins. Equal costs go to the value
/// both logical characters agree on, and otherwise to `0`.
#[derive(Clone, Debug)]
pub struct MatchingDecoder {
    graph: SyndromeGraph,
    distances: DistanceTable,
    max_defects: usize,
}

impl MatchingDecoder {
    pub fn new(graph: SyndromeGraph) -> Result<Self, DecodeError> {
        let distances = all_pairs_distances(&graph)?;
        Ok(Self {
            graph,
            distances,
            max_defects: DEFAULT_MAX_DEFECTS,
        })
    }

    pub fn with_max_defects(mut self, max_defects: usize) -> Self {
        self.max_defects = max_defects;
        self
    }

    pub fn graph(&self) -> &SyndromeGraph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.distances
    }

    pub fn max_defects(&self) -> usize {
        self.max_defects
    }

    /// Dense indices of the characters of `bits` that disagree with the
    /// noiseless string for `hypothesis`.
    pub fn defects(bits: &[bool], hypothesis: Logical) -> Vec<usize> {
        bits.iter()
            .enumerate()
            .filter(|&(i, &b)| if i < 2 { b != hypothesis.bit() } else { b })
            .map(|(i, _)| i)
            .collect()
    }

    /// Matching cost for hypotheses `0` and `1`.
    pub fn hypothesis_costs(&self, processed: &str) -> Result<[f64; 2], DecodeError> {
        let bits = self.graph.layout().parse_processed(processed)?;
        let mut costs = [0.0; 2];
        for h in Logical::BOTH {
            let defects = Self::defects(&bits, h);
            costs[h.bit() as usize] = mwpm(&defects, &self.distances, self.max_defects)
                .map_err(|e| e.at(processed))?
                .total_weight;
        }
        Ok(costs)
    }

    pub fn decode(&self, processed: &str) -> Result<Logical, DecodeError> {
        let [w0, w1] = self.hypothesis_costs(processed)?;
        if w0 < w1 {
            Ok(Logical::Zero)
        } else if w1 < w0 {
            Ok(Logical::One)
        } else {
            let bits = self.graph.layout().parse_processed(processed)?;
            Ok(if bits[0] && bits[1] {
                Logical::One
            } else {
                Logical::Zero
            })
        }
    }

    /// Fraction of shots per encoded value that decode to the other value.
    pub fn get_logical_prob(
        &self,
        results: &ProcessedResults,
    ) -> Result<LogicalErrorReport, DecodeError> {
        if results.is_empty() || results.iter().all(|(_, c)| c.total() == 0) {
            return Err(DecodeError::EmptyResults);
        }
        let mut labels = BTreeMap::new();
        for (label, counts) in results.iter() {
            let entries: Vec<(&str, u64)> = counts.iter().collect();
            let misdecoded = entries
                .par_iter()
                .map(|&(s, count)| {
                    Ok::<u64, DecodeError>(if self.decode(s)? != label { count } else { 0 })
                })
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            labels.insert(label, LabelOutcome::new(misdecoded, 0, counts.total()));
        }
        Ok(LogicalErrorReport {
            decoder: DecoderKind::Matching,
            labels,
        })
    }
}

/// Decodes one processed string against `graph`.
///
/// Builds the distance table on every call; use [`MatchingDecoder`] when
/// decoding many strings.
pub fn matching_decode(graph: &SyndromeGraph, processed: &str) -> Result<Logical, DecodeError> {
    MatchingDecoder::new(graph.clone())?.decode(processed)
}
