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

//! Circuits over classical bit values.
//!
//! Only gates that keep computational basis states as basis states are
//! executable by the simulator. Anything else can still be recorded as an
//! [`Instruction::Opaque`] so that callers get a precise rejection instead of
//! a silently wrong answer.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::SimError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Instruction {
    X(usize),
    Cx {
        control: usize,
        target: usize,
    },
    Measure {
        qubit: usize,
        clbit: usize,
    },
    Reset(usize),
    Barrier(Vec<usize>),
    /// A gate the bit-level simulator cannot execute, e.g. `h`.
    Opaque {
        name: String,
        qubits: Vec<usize>,
    },
}

impl Instruction {
    pub fn name(&self) -> &str {
        match self {
            Instruction::X(_) => "x",
            Instruction::Cx { .. } => "cx",
            Instruction::Measure { .. } => "measure",
            Instruction::Reset(_) => "reset",
            Instruction::Barrier(_) => "barrier",
            Instruction::Opaque { name, .. } => name,
        }
    }

    /// Qubits the instruction acts on, in operand order.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Instruction::X(q) | Instruction::Reset(q) => vec![*q],
            Instruction::Cx { control, target } => vec![*control, *target],
            Instruction::Measure { qubit, .. } => vec![*qubit],
            Instruction::Barrier(qs) => qs.clone(),
            Instruction::Opaque { qubits, .. } => qubits.clone(),
        }
    }

    /// Qubits on which a single fault can sit right after this instruction.
    /// Barriers are excluded: a fault after a barrier is indistinguishable
    /// from one after the preceding operation.
    pub fn fault_qubits(&self) -> Vec<usize> {
        match self {
            Instruction::Barrier(_) => Vec::new(),
            other => other.qubits(),
        }
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Measure { qubit, clbit } => write!(f, "measure q{qubit} -> c{clbit}"),
            other => {
                write!(f, "{}", other.name())?;
                for q in other.qubits() {
                    write!(f, " q{q}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalRegister {
    pub name: String,
    pub size: usize,
}

/// Ordered instruction list over `num_qubits` qubits, with classical bits
/// grouped into named registers. Clbit indices are global: the first
/// register occupies `0..size0`, the next `size0..size0+size1`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    num_qubits: usize,
    registers: Vec<ClassicalRegister>,
    instructions: Vec<Instruction>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            registers: Vec::new(),
            instructions: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn num_clbits(&self) -> usize {
        self.registers.iter().map(|r| r.size).sum()
    }

    pub fn registers(&self) -> &[ClassicalRegister] {
        &self.registers
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    /// Appends a classical register and returns the global clbit range it owns.
    pub fn add_register(&mut self, name: impl Into<String>, size: usize) -> Range<usize> {
        let start = self.num_clbits();
        self.registers.push(ClassicalRegister {
            name: name.into(),
            size,
        });
        start..start + size
    }

    pub fn push(&mut self, instruction: Instruction) -> Result<(), SimError> {
        for q in instruction.qubits() {
            if q >= self.num_qubits {
                return Err(SimError::QubitOutOfRange {
                    qubit: q,
                    num_qubits: self.num_qubits,
                });
            }
        }
        match &instruction {
            Instruction::Cx { control, target } if control == target => {
                return Err(SimError::SameControlTarget(*control));
            }
            Instruction::Measure { clbit, .. } if *clbit >= self.num_clbits() => {
                return Err(SimError::ClbitOutOfRange {
                    clbit: *clbit,
                    num_clbits: self.num_clbits(),
                });
            }
            _ => {}
        }
        self.instructions.push(instruction);
        Ok(())
    }

    pub fn x(&mut self, qubit: usize) -> Result<(), SimError> {
        self.push(Instruction::X(qubit))
    }

    pub fn cx(&mut self, control: usize, target: usize) -> Result<(), SimError> {
        self.push(Instruction::Cx { control, target })
    }

    pub fn measure(&mut self, qubit: usize, clbit: usize) -> Result<(), SimError> {
        self.push(Instruction::Measure { qubit, clbit })
    }

    pub fn reset(&mut self, qubit: usize) -> Result<(), SimError> {
        self.push(Instruction::Reset(qubit))
    }

    pub fn barrier(&mut self, qubits: Vec<usize>) -> Result<(), SimError> {
        self.push(Instruction::Barrier(qubits))
    }

    pub fn count_ops(&self, name: &str) -> usize {
        self.instructions
            .iter()
            .filter(|i| i.name() == name)
            .count()
    }

    /// Returns a copy of `self` with `prefix` placed in front of every
    /// existing instruction.
    pub fn prepended(
        &self,
        prefix: impl IntoIterator<Item = Instruction>,
    ) -> Result<Self, SimError> {
        let mut out = Circuit {
            num_qubits: self.num_qubits,
            registers: self.registers.clone(),
            instructions: Vec::new(),
        };
        for instruction in prefix {
            out.push(instruction)?;
        }
        out.instructions.extend(self.instructions.iter().cloned());
        Ok(out)
    }
}

/// Renders classical bit values in register layout: registers separated by
/// single spaces, the most recently added register leftmost, and within each
/// register the highest-index bit leftmost.
pub fn format_outcome(registers: &[ClassicalRegister], bits: &[bool]) -> Result<String, SimError> {
    let expected: usize = registers.iter().map(|r| r.size).sum();
    if expected != bits.len() {
        return Err(SimError::LayoutMismatch {
            expected,
            found: bits.len(),
        });
    }
    let mut offsets = Vec::with_capacity(registers.len());
    let mut start = 0;
    for reg in registers {
        offsets.push(start..start + reg.size);
        start += reg.size;
    }
    let mut out = String::with_capacity(bits.len() + registers.len());
    for range in offsets.iter().rev() {
        if !out.is_empty() {
            out.push(' ');
        }
        for &b in bits[range.clone()].iter().rev() {
            out.push(if b { '1' } else { '0' });
        }
    }
    Ok(out)
}
