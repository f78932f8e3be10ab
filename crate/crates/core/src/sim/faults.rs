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

use std::fmt;

use serde::{Deserialize, Serialize};

use super::circuit::{Circuit, Instruction};
use super::noise::Pauli;
use super::SimError;

/// Where an injected fault sits in a circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    /// Before the first instruction.
    PreCircuit,
    /// Immediately after the instruction with this index.
    After(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaultKind {
    Pauli {
        pauli: Pauli,
        qubit: usize,
    },
    /// Inverts the classical record written by a measurement.
    RecordFlip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ErrorLocation {
    pub position: Position,
    pub kind: FaultKind,
}

impl ErrorLocation {
    pub fn pauli(position: Position, pauli: Pauli, qubit: usize) -> Self {
        Self {
            position,
            kind: FaultKind::Pauli { pauli, qubit },
        }
    }

    pub fn record_flip(instruction: usize) -> Self {
        Self {
            position: Position::After(instruction),
            kind: FaultKind::RecordFlip,
        }
    }

    pub fn validate(&self, circuit: &Circuit) -> Result<(), SimError> {
        let invalid = |reason: &str| SimError::InvalidLocation {
            location: *self,
            reason: reason.to_string(),
        };
        match (self.position, self.kind) {
            (Position::PreCircuit, FaultKind::Pauli { qubit, .. }) => {
                if qubit >= circuit.num_qubits() {
                    return Err(invalid("qubit out of range"));
                }
            }
            (Position::PreCircuit, FaultKind::RecordFlip) => {
                return Err(invalid("record flips must follow a measurement"));
            }
            (Position::After(index), kind) => {
                let instruction = circuit
                    .instructions()
                    .get(index)
                    .ok_or_else(|| invalid("instruction index out of range"))?;
                match kind {
                    FaultKind::Pauli { qubit, .. } => {
                        if !instruction.qubits().contains(&qubit) {
                            return Err(invalid("qubit is not acted on by the instruction"));
                        }
                    }
                    FaultKind::RecordFlip => {
                        if !matches!(instruction, Instruction::Measure { .. }) {
                            return Err(invalid("record flips must follow a measurement"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ErrorLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.position) {
            (FaultKind::Pauli { pauli, qubit }, Position::PreCircuit) => {
                write!(f, "{pauli:?} on q{qubit} before the circuit")
            }
            (FaultKind::Pauli { pauli, qubit }, Position::After(i)) => {
                write!(f, "{pauli:?} on q{qubit} after instruction {i}")
            }
            (FaultKind::RecordFlip, Position::After(i)) => {
                write!(f, "record flip of instruction {i}")
            }
            (FaultKind::RecordFlip, Position::PreCircuit) => {
                write!(f, "record flip before the circuit")
            }
        }
    }
}

/// All distinct single bit-level faults of a circuit, in a fixed order:
/// an X on every qubit before the circuit, then for each instruction an X on
/// every qubit it touches followed (for measurements) by a record flip.
///
/// Z faults never change a bit value and Y acts like X, so X-only enumeration
/// already covers every distinct syndrome.
pub fn enumerate_error_locations(circuit: &Circuit) -> Vec<ErrorLocation> {
    let mut out: Vec<ErrorLocation> = (0..circuit.num_qubits())
        .map(|q| ErrorLocation::pauli(Position::PreCircuit, Pauli::X, q))
        .collect();
    for (index, instruction) in circuit.instructions().iter().enumerate() {
        for q in instruction.fault_qubits() {
            out.push(ErrorLocation::pauli(Position::After(index), Pauli::X, q));
        }
        if matches!(instruction, Instruction::Measure { .. }) {
            out.push(ErrorLocation::record_flip(index));
        }
    }
    out
}
