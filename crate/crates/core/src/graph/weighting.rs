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

//! Edge weights estimated from logical-0 data.
//!
//! For an edge `(u, v)`, `C11` counts shots where both characters read `1`
//! and `C00` shots where both read `0`. To first order the fault behind the
//! edge has `p / (1 - p) = C11 / C00`, and the edge gets weight
//! `-ln(p / (1 - p))`.

use serde::{Deserialize, Serialize};

use super::{GraphError, SyndromeGraph};
use crate::code::{Logical, ProcessedResults};
use crate::stats::Summary;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeStats {
    pub c11: u64,
    pub c00: u64,
    pub p_estimate: f64,
}

/// `C11 / (C11 + C00)` with add-one clamps when either count is zero, so the
/// result is always strictly inside (0, 1).
pub fn estimate_edge_probability(c11: u64, c00: u64) -> f64 {
    if c11 == 0 {
        1.0 / (c00 as f64 + 2.0)
    } else if c00 == 0 {
        1.0 - 1.0 / (c11 as f64 + 2.0)
    } else {
        c11 as f64 / (c11 + c00) as f64
    }
}

/// `-ln(p / (1 - p))`, floored at zero for `p > 1/2`.
pub fn weight_for_probability(p: f64) -> f64 {
    if p >= 0.5 {
        0.0
    } else {
        -(p / (1.0 - p)).ln()
    }
}

/// Returns a copy of `graph` with data-derived weights and per-edge
/// [`EdgeStats`], computed from the logical-0 entry of `results`.
pub fn weight_syndrome_graph(
    graph: &SyndromeGraph,
    results: &ProcessedResults,
) -> Result<SyndromeGraph, GraphError> {
    let counts = results
        .get(Logical::Zero)
        .filter(|c| c.total() > 0)
        .ok_or(GraphError::EmptyResults)?;
    let layout = graph.layout();
    let mut tallies = vec![(0u64, 0u64); graph.edges().len()];
    for (outcome, count) in counts.iter() {
        let bits = layout.parse_processed(outcome)?;
        for (edge, (c11, c00)) in graph.edges().iter().zip(tallies.iter_mut()) {
            match (bits[edge.nodes.0], bits[edge.nodes.1]) {
                (true, true) => *c11 += count,
                (false, false) => *c00 += count,
                _ => {}
            }
        }
    }
    let mut weighted = graph.clone();
    for (edge, (c11, c00)) in weighted.edges_mut().iter_mut().zip(tallies) {
        let p_estimate = estimate_edge_probability(c11, c00);
        edge.weight = weight_for_probability(p_estimate);
        edge.stats = Some(EdgeStats {
            c11,
            c00,
            p_estimate,
        });
    }
    Ok(weighted)
}

/// Descriptive statistics of the per-edge probability estimates.
pub fn edge_probability_summary(graph: &SyndromeGraph) -> Result<Summary, GraphError> {
    if !graph.is_weighted() {
        return Err(GraphError::Unweighted);
    }
    let probabilities: Vec<f64> = graph
        .edges()
        .iter()
        .filter_map(|e| e.stats.map(|s| s.p_estimate))
        .collect();
    Summary::of(&probabilities).ok_or(GraphError::Unweighted)
}
