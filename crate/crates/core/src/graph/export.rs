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

//! JSON and Graphviz DOT renderings of a syndrome graph.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{EdgeStats, Node, SyndromeGraph};
use crate::sim::ErrorLocation;

pub const GRAPH_EXPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphExport {
    pub version: u32,
    pub n: usize,
    pub rounds: usize,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeExport {
    pub index: usize,
    pub label: String,
    pub node: Node,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeExport {
    pub source: usize,
    pub target: usize,
    pub weight: f64,
    pub provenance: Vec<ErrorLocation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<EdgeStats>,
}

impl From<&SyndromeGraph> for GraphExport {
    fn from(graph: &SyndromeGraph) -> Self {
        let layout = graph.layout();
        Self {
            version: GRAPH_EXPORT_VERSION,
            n: layout.n,
            rounds: layout.rounds,
            nodes: graph
                .nodes()
                .enumerate()
                .map(|(index, node)| NodeExport {
                    index,
                    label: node.to_string(),
                    node,
                })
                .collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| EdgeExport {
                    source: e.nodes.0,
                    target: e.nodes.1,
                    weight: e.weight,
                    provenance: e.provenance.clone(),
                    stats: e.stats,
                })
                .collect(),
        }
    }
}

impl SyndromeGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphExport::from(self))
            .expect("graph export is always serializable")
    }

    pub fn to_dot(&self) -> String {
        let layout = self.layout();
        let mut out = String::new();
        let _ = writeln!(out, "graph syndrome_n{}_t{} {{", layout.n, layout.rounds);
        for (i, node) in self.nodes().enumerate() {
            let shape = if matches!(node, Node::Logical(_)) {
                "box"
            } else {
                "ellipse"
            };
            let _ = writeln!(out, "  n{i} [label=\"{node}\", shape={shape}];");
        }
        for e in self.edges() {
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{:.4}\", faults={}];",
                e.nodes.0,
                e.nodes.1,
                e.weight,
                e.provenance.len()
            );
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::RepetitionCode;

    #[test]
    fn json_export_lists_every_node_and_edge() {
        let graph = SyndromeGraph::build(&RepetitionCode::new(3, 1).unwrap()).unwrap();
        let parsed: GraphExport = serde_json::from_str(&graph.to_json()).unwrap();
        assert_eq!(parsed.version, GRAPH_EXPORT_VERSION);
        assert_eq!(parsed.nodes.len(), 6);
        assert_eq!(parsed.edges.len(), graph.edges().len());
        assert_eq!(parsed.nodes[0].label, "L");
        assert!(parsed.edges.iter().all(|e| !e.provenance.is_empty()));
    }

    #[test]
    fn dot_export_is_well_formed() {
        let graph = SyndromeGraph::build(&RepetitionCode::new(3, 1).unwrap()).unwrap();
        let dot = graph.to_dot();
        assert!(dot.starts_with("graph syndrome_n3_t1 {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches(" -- ").count(), graph.edges().len());
    }
}
