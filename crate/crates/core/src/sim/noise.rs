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

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::SimError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    /// Whether the operator changes a computational basis bit.
    pub fn flips_bit(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }
}

/// Readout flips with probability `rho_meas`; single-qubit depolarizing noise
/// of strength `rho_gate` after every `x`, and independently on both qubits
/// after every `cx`.
///
/// The depolarizing channel replaces the qubit state by the maximally mixed
/// state with probability `rho_gate`, i.e. applies X, Y and Z each with
/// probability `rho_gate / 4`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    rho_meas: f64,
    rho_gate: f64,
}

impl NoiseModel {
    pub fn new(rho_meas: f64, rho_gate: f64) -> Result<Self, SimError> {
        for (name, value) in [("rho_meas", rho_meas), ("rho_gate", rho_gate)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(SimError::InvalidProbability { name, value });
            }
        }
        Ok(Self { rho_meas, rho_gate })
    }

    pub fn ideal() -> Self {
        Self {
            rho_meas: 0.0,
            rho_gate: 0.0,
        }
    }

    pub fn rho_meas(&self) -> f64 {
        self.rho_meas
    }

    pub fn rho_gate(&self) -> f64 {
        self.rho_gate
    }

    pub fn is_ideal(&self) -> bool {
        self.rho_meas == 0.0 && self.rho_gate == 0.0
    }

    /// Probability that a gate fault changes the bit value of one qubit.
    pub fn gate_flip_probability(&self) -> f64 {
        self.rho_gate / 2.0
    }

    pub(crate) fn sample_gate_fault<R: Rng>(&self, rng: &mut R) -> Option<Pauli> {
        if self.rho_gate == 0.0 {
            return None;
        }
        let quarter = self.rho_gate / 4.0;
        let u: f64 = rng.gen();
        if u < quarter {
            Some(Pauli::X)
        } else if u < 2.0 * quarter {
            Some(Pauli::Y)
        } else if u < 3.0 * quarter {
            Some(Pauli::Z)
        } else {
            None
        }
    }

    pub(crate) fn sample_readout_flip<R: Rng>(&self, rng: &mut R) -> bool {
        self.rho_meas > 0.0 && rng.gen::<f64>() < self.rho_meas
    }
}
