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

//! Exact minimum-weight perfect matching over a small set of defects.

use serde::Serialize;

use super::DecodeError;
use crate::graph::DistanceTable;

/// Largest defect set the exact solver accepts unless configured otherwise.
pub const DEFAULT_MAX_DEFECTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Matching {
    /// Pairs of dense node indices, each pair ordered `(low, high)` and the
    /// list ordered by its first element.
    pub pairs: Vec<(usize, usize)>,
    pub total_weight: f64,
}

/// Pairs up `defects` so that the summed distance is minimal.
///
/// Runs a dynamic program over subsets of still-unpaired defects: the lowest
/// unpaired defect is always paired first and partners are tried in
/// ascending order, keeping the first strictly better choice. Among optimal
/// matchings the result is therefore the lexicographically smallest list of
/// pairs (over the sorted defects). Pairs with no connecting path cost
/// infinity.
pub fn mwpm(
    defects: &[usize],
    distances: &DistanceTable,
    max_defects: usize,
) -> Result<Matching, DecodeError> {
    let mut sorted = defects.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&node) = sorted.last().filter(|&&v| v >= distances.size()) {
        return Err(DecodeError::UnknownNode {
            node,
            size: distances.size(),
        });
    }
    let k = sorted.len();
    if k % 2 == 1 {
        return Err(DecodeError::OddDefects(k));
    }
    if k > max_defects {
        return Err(DecodeError::Capacity {
            defects: k,
            limit: max_defects,
        });
    }
    if k == 0 {
        return Ok(Matching {
            pairs: Vec::new(),
            total_weight: 0.0,
        });
    }

    let full = (1usize << k) - 1;
    let mut cost = vec![f64::INFINITY; full + 1];
    let mut partner = vec![usize::MAX; full + 1];
    cost[0] = 0.0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut best = f64::INFINITY;
        let mut choice = usize::MAX;
        let mut candidates = rest;
        while candidates != 0 {
            let j = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let total = distances.get(sorted[i], sorted[j]) + cost[rest & !(1 << j)];
            if choice == usize::MAX || total < best {
                best = total;
                choice = j;
            }
        }
        cost[mask] = best;
        partner[mask] = choice;
    }

    let mut pairs = Vec::with_capacity(k / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let j = partner[mask];
        pairs.push((sorted[i], sorted[j]));
        mask &= !(1 << i) & !(1 << j);
    }
    Ok(Matching {
        pairs,
        total_weight: cost[full],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::RepetitionCode;
    use crate::graph::{all_pairs_distances, SyndromeGraph};

    fn table(n: usize, rounds: usize) -> DistanceTable {
        let graph = SyndromeGraph::build(&RepetitionCode::new(n, rounds).unwrap()).unwrap();
        all_pairs_distances(&graph).unwrap()
    }

    #[test]
    fn empty_and_single_pair() {
        let d = table(3, 1);
        let m = mwpm(&[], &d, DEFAULT_MAX_DEFECTS).unwrap();
        assert!(m.pairs.is_empty());
        assert_eq!(m.total_weight, 0.0);
        let m = mwpm(&[5, 2], &d, DEFAULT_MAX_DEFECTS).unwrap();
        assert_eq!(m.pairs, vec![(2, 5)]);
        assert_eq!(m.total_weight, d.get(2, 5));
    }

    #[test]
    fn odd_and_oversized_sets_are_rejected() {
        let d = table(5, 2);
        assert_eq!(mwpm(&[0, 1, 2], &d, 16), Err(DecodeError::OddDefects(3)));
        assert_eq!(
            mwpm(&[0, 99], &d, 16),
            Err(DecodeError::UnknownNode { node: 99, size: 14 })
        );
        assert_eq!(
            mwpm(&[0, 1, 2, 3, 4, 5], &d, 4),
            Err(DecodeError::Capacity {
                defects: 6,
                limit: 4
            })
        );
    }

    #[test]
    fn four_defects_match_hand_enumeration() {
        let d = table(5, 2);
        let defects = [2, 3, 7, 12];
        let options = [
            d.get(2, 3) + d.get(7, 12),
            d.get(2, 7) + d.get(3, 12),
            d.get(2, 12) + d.get(3, 7),
        ];
        let best = options.iter().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(mwpm(&defects, &d, 16).unwrap().total_weight, best);
    }

    #[test]
    fn every_defect_is_paired_once() {
        let d = table(7, 2);
        let defects = [0, 1, 4, 9, 13, 19];
        let m = mwpm(&defects, &d, 16).unwrap();
        let mut seen: Vec<usize> = m.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        assert_eq!(seen, defects);
        assert!(m.pairs.iter().all(|(a, b)| a < b));
    }
}
