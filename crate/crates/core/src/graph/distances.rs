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

use super::{GraphError, SyndromeGraph};

/// Symmetric all-pairs shortest-path distances over dense node indices.
/// Unreachable pairs hold `f64::INFINITY`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceTable {
    size: usize,
    data: Vec<f64>,
}

impl DistanceTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.data[u * self.size + v]
    }

    pub fn unreachable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.size {
            for v in u + 1..self.size {
                if self.get(u, v).is_infinite() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_pairs().is_empty()
    }
}

/// Floyd–Warshall over the graph's edge weights. Negative weights are
/// rejected up front.
pub fn all_pairs_distances(graph: &SyndromeGraph) -> Result<DistanceTable, GraphError> {
    let size = graph.node_count();
    let layout = graph.layout();
    let mut data = vec![f64::INFINITY; size * size];
    for i in 0..size {
        data[i * size + i] = 0.0;
    }
    for edge in graph.edges() {
        let (u, v) = edge.nodes;
        if edge.weight.is_nan() || edge.weight < 0.0 {
            return Err(GraphError::NegativeWeight {
                u: layout.node(u),
                v: layout.node(v),
                weight: edge.weight,
            });
        }
        if edge.weight < data[u * size + v] {
            data[u * size + v] = edge.weight;
            data[v * size + u] = edge.weight;
        }
    }
    for k in 0..size {
        for i in 0..size {
            let ik = data[i * size + k];
            if ik.is_infinite() {
                continue;
            }
            for j in 0..size {
                let through = ik + data[k * size + j];
                if through < data[i * size + j] {
                    data[i * size + j] = through;
                }
            }
        }
    }
    Ok(DistanceTable { size, data })
}
