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

//! Decoding graph for processed repetition-code outcomes.
//!
//! Nodes are the characters of a processed string. Two nodes share an edge
//! when some single fault flips exactly that pair of characters.

mod distances;
mod export;
mod weighting;

pub use distances::{all_pairs_distances, DistanceTable};
pub use export::{GraphExport, GRAPH_EXPORT_VERSION};
pub use weighting::{
    edge_probability_summary, estimate_edge_probability, weight_syndrome_graph, EdgeStats,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, Layout, Logical, RepetitionCode};
use crate::sim::{enumerate_error_locations, run_ideal, run_with_errors, ErrorLocation, SimError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum End {
    /// Code qubit `n-1`, printed first.
    Left,
    /// Code qubit `0`.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    Logical(End),
    /// `block` runs from 1 to `T+1`, `link` from 0 to `n-2`.
    Syndrome {
        block: usize,
        link: usize,
    },
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Logical(End::Left) => write!(f, "L"),
            Node::Logical(End::Right) => write!(f, "R"),
            Node::Syndrome { block, link } => write!(f, "S{block}.{link}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("{location} flips {flips} processed characters; single faults must flip 0 or 2")]
    NotTwoFlip {
        location: ErrorLocation,
        flips: usize,
    },
    #[error("edge {u}-{v} has negative weight {weight}")]
    NegativeWeight { u: Node, v: Node, weight: f64 },
    #[error("no logical-0 results to weight the graph with")]
    EmptyResults,
    #[error("the graph carries no data-derived edge weights")]
    Unweighted,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    /// Dense node indices, smaller first.
    pub nodes: (usize, usize),
    pub weight: f64,
    /// Every enumerated fault that flips exactly this pair.
    pub provenance: Vec<ErrorLocation>,
    pub stats: Option<EdgeStats>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyndromeGraph {
    layout: Layout,
    edges: Vec<Edge>,
}

impl SyndromeGraph {
    /// Injects every enumerated single fault into the logical-0 circuit and
    /// records which pair of processed characters it flips. Unit weights.
    pub fn build(code: &RepetitionCode) -> Result<Self, GraphError> {
        let layout = code.layout();
        let circuit = code.circuit(Logical::Zero);
        let baseline = layout.parse_processed(&layout.process(&run_ideal(circuit)?)?)?;

        let mut edges: BTreeMap<(usize, usize), Vec<ErrorLocation>> = BTreeMap::new();
        for location in enumerate_error_locations(circuit) {
            let raw = run_with_errors(circuit, &[location])?;
            let bits = layout.parse_processed(&layout.process(&raw)?)?;
            let flipped: Vec<usize> = bits
                .iter()
                .zip(&baseline)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(i, _)| i)
                .collect();
            match flipped.as_slice() {
                [] => {}
                [u, v] => edges.entry((*u, *v)).or_default().push(location),
                other => {
                    return Err(GraphError::NotTwoFlip {
                        location,
                        flips: other.len(),
                    })
                }
            }
        }
        let edges = edges
            .into_iter()
            .map(|(nodes, mut provenance)| {
                provenance.sort();
                Edge {
                    nodes,
                    weight: 1.0,
                    provenance,
                    stats: None,
                }
            })
            .collect();
        Ok(Self { layout, edges })
    }

    /// Assembles a graph from explicit edges. Pairs are normalised to
    /// `(smaller, larger)`; duplicates are merged keeping the first weight.
    pub fn from_edges(layout: Layout, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut merged: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
        for mut edge in edges {
            let (a, b) = edge.nodes;
            edge.nodes = (a.min(b), a.max(b));
            match merged.get_mut(&edge.nodes) {
                Some(existing) => existing.provenance.extend(edge.provenance),
                None => {
                    merged.insert(edge.nodes, edge);
                }
            }
        }
        Self {
            layout,
            edges: merged.into_values().collect(),
        }
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn node_count(&self) -> usize {
        self.layout.node_count()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.node_count()).map(|i| self.layout.node(i))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, u: Node, v: Node) -> Option<&Edge> {
        let (a, b) = (self.layout.node_index(u), self.layout.node_index(v));
        let key = (a.min(b), a.max(b));
        self.edges.iter().find(|e| e.nodes == key)
    }

    pub fn is_weighted(&self) -> bool {
        !self.edges.is_empty() && self.edges.iter().all(|e| e.stats.is_some())
    }

    /// Replaces every edge weight, keeping the topology.
    pub fn with_weights(&self, mut weight: impl FnMut(&Edge) -> f64) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: weight(e),
                ..e.clone()
            })
            .collect();
        Self {
            layout: self.layout,
            edges,
        }
    }

    pub(crate) fn edges_mut(&mut self) -> &mut [Edge] {
        &mut self.edges
    }
}
