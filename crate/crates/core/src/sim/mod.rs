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

//! Bit-level simulation of circuits built from `x`, `cx`, `measure`, `reset`
//! and `barrier`, with stochastic Pauli/readout noise and deterministic fault
//! injection.

mod circuit;
mod counts;
mod executor;
mod faults;
mod noise;

pub use circuit::{format_outcome, Circuit, ClassicalRegister, Instruction};
pub use counts::Counts;
pub use executor::{run_ideal, run_with_errors, sample};
pub use faults::{enumerate_error_locations, ErrorLocation, FaultKind, Position};
pub use noise::{NoiseModel, Pauli};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit circuit")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    #[error("clbit {clbit} out of range for {num_clbits} classical bits")]
    ClbitOutOfRange { clbit: usize, num_clbits: usize },
    #[error("cx control and target are both q{0}")]
    SameControlTarget(usize),
    #[error("unsupported instruction `{name}` at index {index}")]
    Unsupported { index: usize, name: String },
    #[error("invalid error location ({location}): {reason}")]
    InvalidLocation {
        location: ErrorLocation,
        reason: String,
    },
    #[error("{name} = {value} is not a probability")]
    InvalidProbability { name: &'static str, value: f64 },
    #[error("shots must be at least 1")]
    ZeroShots,
    #[error("register layout holds {expected} bits but {found} were given")]
    LayoutMismatch { expected: usize, found: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Circuit {
        let mut c = Circuit::new(2);
        c.add_register("c", 1);
        c.cx(0, 1).unwrap();
        c.measure(1, 0).unwrap();
        c
    }

    #[test]
    fn empty_circuit_reads_zero() {
        let mut c = Circuit::new(1);
        c.add_register("c", 1);
        assert_eq!(run_ideal(&c).unwrap(), "0");
    }

    #[test]
    fn format_outcome_orders_registers_and_bits() {
        let regs = vec![
            ClassicalRegister {
                name: "round1".into(),
                size: 2,
            },
            ClassicalRegister {
                name: "final".into(),
                size: 3,
            },
        ];
        assert_eq!(format_outcome(&regs, &[false; 5]).unwrap(), "000 00");
        let regs3 = vec![
            ClassicalRegister {
                name: "r1".into(),
                size: 2,
            },
            ClassicalRegister {
                name: "r2".into(),
                size: 2,
            },
            ClassicalRegister {
                name: "final".into(),
                size: 3,
            },
        ];
        // r1 = 00, r2 = 10 (bit 1 set), final = 111
        let bits = [false, false, false, true, true, true, true];
        assert_eq!(format_outcome(&regs3, &bits).unwrap(), "111 10 00");
        let one = vec![ClassicalRegister {
            name: "c".into(),
            size: 1,
        }];
        assert_eq!(format_outcome(&one, &[true]).unwrap(), "1");
        assert!(matches!(
            format_outcome(&one, &[true, false]),
            Err(SimError::LayoutMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn construction_rejects_bad_operands() {
        let mut c = Circuit::new(2);
        c.add_register("c", 1);
        assert_eq!(c.cx(1, 1), Err(SimError::SameControlTarget(1)));
        assert!(matches!(c.x(2), Err(SimError::QubitOutOfRange { .. })));
        assert!(matches!(
            c.measure(0, 1),
            Err(SimError::ClbitOutOfRange { .. })
        ));
    }

    #[test]
    fn opaque_gates_are_rejected_with_their_position() {
        let mut c = small();
        c.push(Instruction::Opaque {
            name: "h".into(),
            qubits: vec![0],
        })
        .unwrap();
        assert_eq!(
            run_ideal(&c),
            Err(SimError::Unsupported {
                index: 2,
                name: "h".into()
            })
        );
    }

    #[test]
    fn enumeration_of_two_instruction_circuit() {
        let locations = enumerate_error_locations(&small());
        let expected = vec![
            ErrorLocation::pauli(Position::PreCircuit, Pauli::X, 0),
            ErrorLocation::pauli(Position::PreCircuit, Pauli::X, 1),
            ErrorLocation::pauli(Position::After(0), Pauli::X, 0),
            ErrorLocation::pauli(Position::After(0), Pauli::X, 1),
            ErrorLocation::pauli(Position::After(1), Pauli::X, 1),
            ErrorLocation::record_flip(1),
        ];
        assert_eq!(locations, expected);

        let mut empty = Circuit::new(1);
        empty.add_register("c", 1);
        assert_eq!(enumerate_error_locations(&empty).len(), 1);
    }

    #[test]
    fn injection_semantics() {
        let c = small();
        let pre_x0 = ErrorLocation::pauli(Position::PreCircuit, Pauli::X, 0);
        assert_eq!(run_with_errors(&c, &[]).unwrap(), "0");
        assert_eq!(run_with_errors(&c, &[pre_x0]).unwrap(), "1");
        assert_eq!(run_with_errors(&c, &[pre_x0, pre_x0]).unwrap(), "0");
        let pre_y0 = ErrorLocation::pauli(Position::PreCircuit, Pauli::Y, 0);
        let pre_z0 = ErrorLocation::pauli(Position::PreCircuit, Pauli::Z, 0);
        assert_eq!(run_with_errors(&c, &[pre_y0]).unwrap(), "1");
        assert_eq!(run_with_errors(&c, &[pre_z0]).unwrap(), "0");
        assert_eq!(
            run_with_errors(&c, &[ErrorLocation::record_flip(1)]).unwrap(),
            "1"
        );
        // an X after cx on the control never reaches the measured target
        let late = ErrorLocation::pauli(Position::After(0), Pauli::X, 0);
        assert_eq!(run_with_errors(&c, &[late]).unwrap(), "0");
    }

    #[test]
    fn invalid_locations_are_rejected() {
        let c = small();
        let bad = [
            ErrorLocation::record_flip(0),
            ErrorLocation::pauli(Position::After(1), Pauli::X, 0),
            ErrorLocation::pauli(Position::After(9), Pauli::X, 0),
            ErrorLocation::pauli(Position::PreCircuit, Pauli::X, 5),
            ErrorLocation {
                position: Position::PreCircuit,
                kind: FaultKind::RecordFlip,
            },
        ];
        for location in bad {
            assert!(
                matches!(
                    run_with_errors(&c, &[location]),
                    Err(SimError::InvalidLocation { .. })
                ),
                "{location} accepted"
            );
        }
    }

    #[test]
    fn sampling_rejects_zero_shots_and_bad_noise() {
        assert_eq!(
            sample(&small(), &NoiseModel::ideal(), 0, 1),
            Err(SimError::ZeroShots)
        );
        assert!(NoiseModel::new(1.5, 0.0).is_err());
        assert!(NoiseModel::new(0.0, -0.1).is_err());
        assert!(NoiseModel::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn noisy_sampling_is_reproducible_and_conserves_shots() {
        let mut c = Circuit::new(3);
        c.add_register("c", 3);
        for q in 0..3 {
            c.x(q).unwrap();
        }
        for q in 0..3 {
            c.measure(q, q).unwrap();
        }
        let noise = NoiseModel::new(0.1, 0.1).unwrap();
        let a = sample(&c, &noise, 2000, 42).unwrap();
        let b = sample(&c, &noise, 2000, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), 2000);
        let other = sample(&c, &noise, 2000, 43).unwrap();
        assert_ne!(a, other);
    }
}
