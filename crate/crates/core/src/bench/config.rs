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

use serde::{Deserialize, Serialize};

use super::BenchError;
use crate::code::Logical;
use crate::decode::{DecoderKind, DEFAULT_MAX_DEFECTS};
use crate::sim::NoiseModel;

/// How matching-decoder edge weights are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weighting {
    /// Every edge weighs 1.
    Unit,
    /// Weights estimated from the logical-0 results of the same run.
    Data,
}

/// What a derived seed is used for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedPurpose {
    Results,
    Table,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub n_step: usize,
    pub rounds: usize,
    pub rho_meas: f64,
    pub rho_gate: f64,
    /// Shots per encoded value.
    pub shots: u64,
    /// Shots per encoded value for the lookup decoder's reference table.
    pub table_shots: u64,
    pub seed: u64,
    pub decoder: DecoderKind,
    pub weighting: Weighting,
    pub max_defects: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_min: 3,
            n_max: 3,
            n_step: 1,
            rounds: 1,
            rho_meas: 0.0,
            rho_gate: 0.0,
            shots: 1024,
            table_shots: 10_000,
            seed: 0,
            decoder: DecoderKind::Matching,
            weighting: Weighting::Unit,
            max_defects: DEFAULT_MAX_DEFECTS,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        let bad = |reason: String| Err(BenchError::Config(reason));
        if self.n_min < 2 {
            return bad(format!("n_min must be at least 2 (got {})", self.n_min));
        }
        if self.n_max < self.n_min {
            return bad(format!(
                "n_max ({}) is below n_min ({})",
                self.n_max, self.n_min
            ));
        }
        if self.n_step == 0 {
            return bad("n_step must be positive".into());
        }
        if self.rounds == 0 {
            return bad("rounds must be positive".into());
        }
        if self.shots == 0 {
            return bad("shots must be positive".into());
        }
        if self.decoder == DecoderKind::Lookup && self.table_shots == 0 {
            return bad("table_shots must be positive for lookup decoding".into());
        }
        NoiseModel::new(self.rho_meas, self.rho_gate)
            .map_err(|e| BenchError::Config(e.to_string()))?;
        Ok(())
    }

    /// Code sizes `n_min, n_min + n_step, ...` up to `n_max`.
    pub fn code_sizes(&self) -> Vec<usize> {
        (self.n_min..=self.n_max)
            .step_by(self.n_step.max(1))
            .collect()
    }

    pub fn noise(&self) -> Result<NoiseModel, BenchError> {
        NoiseModel::new(self.rho_meas, self.rho_gate).map_err(|e| BenchError::Config(e.to_string()))
    }

    /// Seed for one sampling job, independent of every other job in the run
    /// and of the order jobs execute in.
    pub fn derive_seed(&self, n: usize, label: Logical, purpose: SeedPurpose) -> u64 {
        let purpose = match purpose {
            SeedPurpose::Results => 1,
            SeedPurpose::Table => 2,
        };
        [n as u64, label.bit() as u64, purpose]
            .iter()
            .fold(splitmix64(self.seed), |acc, &x| {
                splitmix64(acc ^ splitmix64(x))
            })
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        BenchConfig::default().validate().unwrap();
        assert_eq!(BenchConfig::default().code_sizes(), vec![3]);
    }

    #[test]
    fn odd_sweep() {
        let config = BenchConfig {
            n_min: 3,
            n_max: 8,
            n_step: 2,
            ..Default::default()
        };
        assert_eq!(config.code_sizes(), vec![3, 5, 7]);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let base = BenchConfig::default();
        for config in [
            BenchConfig {
                n_min: 1,
                ..base.clone()
            },
            BenchConfig {
                n_max: 2,
                ..base.clone()
            },
            BenchConfig {
                n_step: 0,
                ..base.clone()
            },
            BenchConfig {
                rounds: 0,
                ..base.clone()
            },
            BenchConfig {
                shots: 0,
                ..base.clone()
            },
            BenchConfig {
                rho_gate: 1.5,
                ..base.clone()
            },
            BenchConfig {
                decoder: DecoderKind::Lookup,
                table_shots: 0,
                ..base.clone()
            },
        ] {
            assert!(
                matches!(config.validate(), Err(BenchError::Config(_))),
                "{config:?}"
            );
        }
    }

    #[test]
    fn derived_seeds_are_distinct() {
        let config = BenchConfig::default();
        let mut seeds = Vec::new();
        for n in 3..10 {
            for label in Logical::BOTH {
                for purpose in [SeedPurpose::Results, SeedPurpose::Table] {
                    seeds.push(config.derive_seed(n, label, purpose));
                }
            }
        }
        let count = seeds.len();
        seeds.sort_unstable();
        seeds.dedup();
        assert_eq!(seeds.len(), count);
        assert_ne!(
            config.derive_seed(3, Logical::Zero, SeedPurpose::Results),
            BenchConfig {
                seed: 1,
                ..config.clone()
            }
            .derive_seed(3, Logical::Zero, SeedPurpose::Results)
        );
    }
}
