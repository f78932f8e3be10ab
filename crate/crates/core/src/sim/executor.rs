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

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::circuit::{format_outcome, Circuit, Instruction};
use super::counts::Counts;
use super::faults::{ErrorLocation, FaultKind, Position};
use super::noise::NoiseModel;
use super::SimError;

/// Deterministic bit flips compiled from a set of error locations.
#[derive(Default)]
struct Injections {
    pre: Vec<usize>,
    after: HashMap<usize, Vec<usize>>,
    record_flips: HashMap<usize, bool>,
}

impl Injections {
    fn compile(circuit: &Circuit, errors: &[ErrorLocation]) -> Result<Self, SimError> {
        let mut plan = Injections::default();
        for location in errors {
            location.validate(circuit)?;
            match (location.position, location.kind) {
                (_, FaultKind::Pauli { pauli, .. }) if !pauli.flips_bit() => {}
                (Position::PreCircuit, FaultKind::Pauli { qubit, .. }) => plan.pre.push(qubit),
                (Position::After(i), FaultKind::Pauli { qubit, .. }) => {
                    plan.after.entry(i).or_default().push(qubit)
                }
                (Position::After(i), FaultKind::RecordFlip) => {
                    *plan.record_flips.entry(i).or_insert(false) ^= true
                }
                (Position::PreCircuit, FaultKind::RecordFlip) => {
                    unreachable!("rejected by validate")
                }
            }
        }
        Ok(plan)
    }
}

fn check_supported(circuit: &Circuit) -> Result<(), SimError> {
    for (index, instruction) in circuit.instructions().iter().enumerate() {
        if let Instruction::Opaque { name, .. } = instruction {
            return Err(SimError::Unsupported {
                index,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

/// Runs one shot and returns the classical bits by global clbit index.
fn execute(
    circuit: &Circuit,
    injections: Option<&Injections>,
    mut noise: Option<(&NoiseModel, &mut ChaCha8Rng)>,
) -> Vec<bool> {
    let mut qubits = vec![false; circuit.num_qubits()];
    let mut clbits = vec![false; circuit.num_clbits()];
    if let Some(plan) = injections {
        for &q in &plan.pre {
            qubits[q] ^= true;
        }
    }
    for (index, instruction) in circuit.instructions().iter().enumerate() {
        match instruction {
            Instruction::X(q) => {
                qubits[*q] ^= true;
                if let Some((model, rng)) = noise.as_mut() {
                    if model.sample_gate_fault(*rng).is_some_and(|p| p.flips_bit()) {
                        qubits[*q] ^= true;
                    }
                }
            }
            Instruction::Cx { control, target } => {
                qubits[*target] ^= qubits[*control];
                if let Some((model, rng)) = noise.as_mut() {
                    for q in [*control, *target] {
                        if model.sample_gate_fault(*rng).is_some_and(|p| p.flips_bit()) {
                            qubits[q] ^= true;
                        }
                    }
                }
            }
            Instruction::Measure { qubit, clbit } => {
                let mut record = qubits[*qubit];
                if let Some((model, rng)) = noise.as_mut() {
                    record ^= model.sample_readout_flip(*rng);
                }
                if let Some(plan) = injections {
                    record ^= plan.record_flips.get(&index).copied().unwrap_or(false);
                }
                clbits[*clbit] = record;
            }
            Instruction::Reset(q) => qubits[*q] = false,
            Instruction::Barrier(_) => {}
            Instruction::Opaque { .. } => unreachable!("rejected by check_supported"),
        }
        if let Some(plan) = injections {
            if let Some(flips) = plan.after.get(&index) {
                for &q in flips {
                    qubits[q] ^= true;
                }
            }
        }
    }
    clbits
}

/// Noiseless execution from the all-zero state.
pub fn run_ideal(circuit: &Circuit) -> Result<String, SimError> {
    check_supported(circuit)?;
    let bits = execute(circuit, None, None);
    format_outcome(circuit.registers(), &bits)
}

/// Noiseless execution with the given faults injected. Injecting the same
/// bit flip twice cancels.
pub fn run_with_errors(circuit: &Circuit, errors: &[ErrorLocation]) -> Result<String, SimError> {
    check_supported(circuit)?;
    let plan = Injections::compile(circuit, errors)?;
    let bits = execute(circuit, Some(&plan), None);
    format_outcome(circuit.registers(), &bits)
}

fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

/// Samples `shots` independent noisy executions.
///
/// Shot `i` draws from stream `i` of a ChaCha8 generator keyed by `seed`, so
/// the result does not depend on how shots are spread across threads.
pub fn sample(
    circuit: &Circuit,
    noise: &NoiseModel,
    shots: u64,
    seed: u64,
) -> Result<Counts, SimError> {
    if shots == 0 {
        return Err(SimError::ZeroShots);
    }
    check_supported(circuit)?;
    if noise.is_ideal() {
        let outcome = run_ideal(circuit)?;
        return Ok(Counts::from_iter([(outcome, shots)]));
    }
    let tally = (0..shots)
        .into_par_iter()
        .fold(HashMap::<Vec<bool>, u64>::new, |mut acc, shot| {
            let mut rng = shot_rng(seed, shot);
            let bits = execute(circuit, None, Some((noise, &mut rng)));
            *acc.entry(bits).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut counts = Counts::new();
    for (bits, count) in tally {
        counts.add(format_outcome(circuit.registers(), &bits)?, count);
    }
    Ok(counts)
}
