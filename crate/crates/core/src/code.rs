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

//! Repetition-code circuits and the two outcome-string conventions.
//!
//! Raw strings come straight from the circuit registers:
//! `"<final n bits> <round T> ... <round 1>"`, every block printed with its
//! lowest qubit/link index rightmost.
//!
//! Processed strings regroup the same information so that any single fault
//! flips exactly two characters: `"lL lR  B1 B2 ... B(T+1)"` where `lL`/`lR`
//! are the final readouts of code qubits `n-1` and `0`, `B1` is the first
//! round's syndrome, `Br` is the change between rounds `r-1` and `r`, and
//! `B(T+1)` is the change between round `T` and the syndrome implied by the
//! final readout.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{End, Node};
use crate::sim::{run_ideal, Circuit, Counts, Instruction, SimError};

/// Encoded bit value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Logical {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
}

impl Logical {
    pub const BOTH: [Logical; 2] = [Logical::Zero, Logical::One];

    pub fn bit(self) -> bool {
        self == Logical::One
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Logical::One
        } else {
            Logical::Zero
        }
    }

    pub fn as_char(self) -> char {
        if self.bit() {
            '1'
        } else {
            '0'
        }
    }

    pub fn parse(label: &str) -> Option<Self> {
        match label {
            "0" => Some(Logical::Zero),
            "1" => Some(Logical::One),
            _ => None,
        }
    }
}

impl fmt::Display for Logical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CodeError {
    #[error("a repetition code needs n >= 2 (got {0})")]
    TooFewRepetitions(usize),
    #[error("a repetition code needs at least one syndrome round")]
    NoRounds,
    #[error("outcome '{string}' does not match the layout for n={n}, T={rounds}: {reason}")]
    Layout {
        string: String,
        n: usize,
        rounds: usize,
        reason: String,
    },
    #[error(transparent)]
    Circuit(#[from] SimError),
}

macro_rules! labeled_counts {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(BTreeMap<Logical, Counts>);

        impl $name {
            pub fn new() -> Self {
                Self::default()
            }

            pub fn insert(&mut self, label: Logical, counts: Counts) {
                self.0.insert(label, counts);
            }

            pub fn get(&self, label: Logical) -> Option<&Counts> {
                self.0.get(&label)
            }

            pub fn iter(&self) -> impl Iterator<Item = (Logical, &Counts)> {
                self.0.iter().map(|(k, v)| (*k, v))
            }

            pub fn is_empty(&self) -> bool {
                self.0.values().all(Counts::is_empty)
            }
        }

        impl FromIterator<(Logical, Counts)> for $name {
            fn from_iter<I: IntoIterator<Item = (Logical, Counts)>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }
    };
}

labeled_counts!(
    /// Raw outcome counts per encoded value.
    RawResults
);
labeled_counts!(
    /// Processed outcome counts per encoded value.
    ProcessedResults
);

/// Shape of the outcome strings of a `RepetitionCode(n, rounds)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Layout {
    pub n: usize,
    pub rounds: usize,
}

/// A raw outcome split into bit vectors indexed by qubit / link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawOutcome {
    pub code: Vec<bool>,
    /// `rounds[r][j]` is the round `r+1` result of link `j`.
    pub rounds: Vec<Vec<bool>>,
}

fn parse_block(block: &str) -> Option<Vec<bool>> {
    // stored lowest index first
    block
        .chars()
        .rev()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

fn render_block(bits: &[bool], out: &mut String) {
    out.extend(bits.iter().rev().map(|&b| if b { '1' } else { '0' }));
}

/// Link `j` reports whether code qubits `j` and `j+1` disagree.
pub fn derived_final_syndrome(code: &[bool]) -> Vec<bool> {
    code.windows(2).map(|w| w[0] ^ w[1]).collect()
}

/// String form of [`derived_final_syndrome`]: takes and returns blocks in
/// display order (highest index leftmost).
pub fn derived_final_syndrome_str(final_readout: &str, n: usize) -> Result<String, CodeError> {
    let bits = parse_block(final_readout)
        .filter(|b| b.len() == n)
        .ok_or_else(|| CodeError::Layout {
            string: final_readout.to_string(),
            n,
            rounds: 0,
            reason: format!("final readout must be {n} binary digits"),
        })?;
    let mut out = String::new();
    render_block(&derived_final_syndrome(&bits), &mut out);
    Ok(out)
}

impl Layout {
    pub fn new(n: usize, rounds: usize) -> Result<Self, CodeError> {
        if n < 2 {
            return Err(CodeError::TooFewRepetitions(n));
        }
        if rounds < 1 {
            return Err(CodeError::NoRounds);
        }
        Ok(Self { n, rounds })
    }

    /// Infers `n` and `T` from the block structure of a raw string.
    pub fn infer_from_raw(raw: &str) -> Result<Self, CodeError> {
        let blocks: Vec<&str> = raw.split(' ').collect();
        let n = blocks[0].len();
        let bad = |reason: &str| CodeError::Layout {
            string: raw.to_string(),
            n,
            rounds: blocks.len().saturating_sub(1),
            reason: reason.to_string(),
        };
        if blocks.len() < 2 {
            return Err(bad(
                "expected a final readout followed by at least one syndrome round",
            ));
        }
        let layout = Layout::new(n, blocks.len() - 1).map_err(|e| bad(&e.to_string()))?;
        layout.parse_raw(raw)?;
        Ok(layout)
    }

    pub fn num_links(&self) -> usize {
        self.n - 1
    }

    /// Number of characters (and graph nodes) in a processed string.
    pub fn node_count(&self) -> usize {
        2 + (self.rounds + 1) * self.num_links()
    }

    /// Dense node index: `Logical(Left)` is 0, `Logical(Right)` is 1, then
    /// syndrome nodes ordered by block and link.
    pub fn node_index(&self, node: Node) -> usize {
        match node {
            Node::Logical(End::Left) => 0,
            Node::Logical(End::Right) => 1,
            Node::Syndrome { block, link } => 2 + (block - 1) * self.num_links() + link,
        }
    }

    pub fn node(&self, index: usize) -> Node {
        match index {
            0 => Node::Logical(End::Left),
            1 => Node::Logical(End::Right),
            i => {
                let k = i - 2;
                Node::Syndrome {
                    block: k / self.num_links() + 1,
                    link: k % self.num_links(),
                }
            }
        }
    }

    fn layout_error(&self, string: &str, reason: impl Into<String>) -> CodeError {
        CodeError::Layout {
            string: string.to_string(),
            n: self.n,
            rounds: self.rounds,
            reason: reason.into(),
        }
    }

    pub fn parse_raw(&self, raw: &str) -> Result<RawOutcome, CodeError> {
        let blocks: Vec<&str> = raw.split(' ').collect();
        if blocks.len() != self.rounds + 1 {
            return Err(self.layout_error(
                raw,
                format!(
                    "expected {} blocks, found {}",
                    self.rounds + 1,
                    blocks.len()
                ),
            ));
        }
        let code = parse_block(blocks[0])
            .filter(|b| b.len() == self.n)
            .ok_or_else(|| {
                self.layout_error(
                    raw,
                    format!("final readout must be {} binary digits", self.n),
                )
            })?;
        let mut rounds = Vec::with_capacity(self.rounds);
        // round 1 is rightmost
        for block in blocks[1..].iter().rev() {
            let bits = parse_block(block)
                .filter(|b| b.len() == self.num_links())
                .ok_or_else(|| {
                    self.layout_error(
                        raw,
                        format!("syndrome blocks must be {} binary digits", self.num_links()),
                    )
                })?;
            rounds.push(bits);
        }
        Ok(RawOutcome { code, rounds })
    }

    pub fn check_raw(&self, raw: &str) -> Result<(), CodeError> {
        self.parse_raw(raw).map(|_| ())
    }

    /// Syndrome-change blocks `B1..B(T+1)` of a raw outcome, indexed by link.
    pub fn change_blocks(&self, raw: &RawOutcome) -> Vec<Vec<bool>> {
        let mut blocks = Vec::with_capacity(self.rounds + 1);
        let mut previous = vec![false; self.num_links()];
        let derived = derived_final_syndrome(&raw.code);
        for current in raw.rounds.iter().chain(std::iter::once(&derived)) {
            blocks.push(current.iter().zip(&previous).map(|(a, b)| a ^ b).collect());
            previous.clone_from(current);
        }
        blocks
    }

    pub fn process(&self, raw: &str) -> Result<String, CodeError> {
        let parsed = self.parse_raw(raw)?;
        let blocks = self.change_blocks(&parsed);
        let bit = |b: bool| if b { '1' } else { '0' };
        let mut out = String::with_capacity(self.node_count() + self.rounds + 4);
        out.push(bit(parsed.code[self.n - 1]));
        out.push(' ');
        out.push(bit(parsed.code[0]));
        out.push(' ');
        for block in &blocks {
            out.push(' ');
            render_block(block, &mut out);
        }
        Ok(out)
    }

    /// Processed string to per-node bits in dense node order.
    pub fn parse_processed(&self, processed: &str) -> Result<Vec<bool>, CodeError> {
        let (logical, syndrome) = processed.split_once("  ").ok_or_else(|| {
            self.layout_error(processed, "missing double space after the logical readout")
        })?;
        let logical: Vec<char> = logical.chars().collect();
        let digit = |c: char| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        };
        let (left, right) = match logical.as_slice() {
            [l, ' ', r] => (digit(*l), digit(*r)),
            _ => (None, None),
        };
        let (Some(left), Some(right)) = (left, right) else {
            return Err(self.layout_error(processed, "logical readout must be two binary digits"));
        };
        let mut bits = vec![false; self.node_count()];
        bits[0] = left;
        bits[1] = right;
        let blocks: Vec<&str> = syndrome.split(' ').collect();
        if blocks.len() != self.rounds + 1 {
            return Err(self.layout_error(
                processed,
                format!(
                    "expected {} syndrome blocks, found {}",
                    self.rounds + 1,
                    blocks.len()
                ),
            ));
        }
        for (t, block) in blocks.iter().enumerate() {
            let parsed = parse_block(block)
                .filter(|b| b.len() == self.num_links())
                .ok_or_else(|| {
                    self.layout_error(
                        processed,
                        format!("syndrome blocks must be {} binary digits", self.num_links()),
                    )
                })?;
            for (j, b) in parsed.into_iter().enumerate() {
                bits[self.node_index(Node::Syndrome {
                    block: t + 1,
                    link: j,
                })] = b;
            }
        }
        Ok(bits)
    }
}

/// The logical-0 and logical-1 circuits of an `n`-fold repetition code with
/// `rounds` syndrome-measurement rounds.
///
/// Qubits are laid out along a line: code qubit `j` is `2j`, link qubit `j`
/// (between code qubits `j` and `j+1`) is `2j+1`.
#[derive(Clone, Debug)]
pub struct RepetitionCode {
    layout: Layout,
    code_qubits: Vec<usize>,
    link_qubits: Vec<usize>,
    circuit_0: Circuit,
    circuit_1: Circuit,
}

impl RepetitionCode {
    pub fn new(n: usize, rounds: usize) -> Result<Self, CodeError> {
        let layout = Layout::new(n, rounds)?;
        let code_qubits: Vec<usize> = (0..n).map(|j| 2 * j).collect();
        let link_qubits: Vec<usize> = (0..n - 1).map(|j| 2 * j + 1).collect();

        let mut circuit = Circuit::new(2 * n - 1);
        for r in 1..=rounds {
            let bits = circuit.add_register(format!("round_{r}_link_bit"), n - 1);
            for j in 0..n - 1 {
                circuit.cx(code_qubits[j], link_qubits[j])?;
                circuit.cx(code_qubits[j + 1], link_qubits[j])?;
            }
            for (j, clbit) in bits.enumerate() {
                circuit.measure(link_qubits[j], clbit)?;
                circuit.reset(link_qubits[j])?;
            }
        }
        let final_bits = circuit.add_register("code_bit", n);
        for (j, clbit) in final_bits.enumerate() {
            circuit.measure(code_qubits[j], clbit)?;
        }
        let circuit_1 = circuit.prepended(code_qubits.iter().map(|&q| Instruction::X(q)))?;

        Ok(Self {
            layout,
            code_qubits,
            link_qubits,
            circuit_0: circuit,
            circuit_1,
        })
    }

    pub fn n(&self) -> usize {
        self.layout.n
    }

    pub fn rounds(&self) -> usize {
        self.layout.rounds
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn code_qubits(&self) -> &[usize] {
        &self.code_qubits
    }

    pub fn link_qubits(&self) -> &[usize] {
        &self.link_qubits
    }

    pub fn circuit(&self, label: Logical) -> &Circuit {
        match label {
            Logical::Zero => &self.circuit_0,
            Logical::One => &self.circuit_1,
        }
    }

    /// Noiseless raw outcome for each encoded value.
    pub fn ideal_outcomes(&self) -> Result<[String; 2], CodeError> {
        Ok([run_ideal(&self.circuit_0)?, run_ideal(&self.circuit_1)?])
    }

    /// Checks the structural property that each round uses exactly
    /// `2(n-1)` cx gates.
    pub fn layout_check(&self) -> Result<(), String> {
        let expected = 2 * (self.n() - 1) * self.rounds();
        for label in Logical::BOTH {
            let found = self.circuit(label).count_ops("cx");
            if found != expected {
                return Err(format!(
                    "{found} instead of {expected} cx gates for n = {} (logical {label})",
                    self.n()
                ));
            }
        }
        Ok(())
    }

    pub fn process_outcome(&self, raw: &str) -> Result<String, CodeError> {
        self.layout.process(raw)
    }

    /// Rewrites raw counts into processed form; counts of raw strings that
    /// map to the same processed string are summed.
    pub fn process_results(&self, raw: &RawResults) -> Result<ProcessedResults, CodeError> {
        raw.iter()
            .map(|(label, counts)| {
                let mut processed = Counts::new();
                for (s, c) in counts.iter() {
                    processed.add(self.layout.process(s)?, c);
                }
                Ok((label, processed))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{enumerate_error_locations, run_with_errors, ErrorLocation, Pauli, Position};

    #[test]
    fn rejects_degenerate_parameters() {
        assert_eq!(
            RepetitionCode::new(1, 1).unwrap_err(),
            CodeError::TooFewRepetitions(1)
        );
        assert_eq!(RepetitionCode::new(3, 0).unwrap_err(), CodeError::NoRounds);
    }

    #[test]
    fn qubit_and_register_bookkeeping() {
        let code = RepetitionCode::new(5, 3).unwrap();
        let c0 = code.circuit(Logical::Zero);
        assert_eq!(c0.num_qubits(), 9);
        assert_eq!(c0.registers().len(), 4);
        assert!(c0.registers()[..3].iter().all(|r| r.size == 4));
        assert_eq!(c0.registers()[3].size, 5);
        assert_eq!(code.code_qubits(), &[0, 2, 4, 6, 8]);
        assert_eq!(code.link_qubits(), &[1, 3, 5, 7]);
        let c1 = code.circuit(Logical::One);
        assert_eq!(&c1.instructions()[5..], c0.instructions());
        assert!(c1.instructions()[..5]
            .iter()
            .all(|i| matches!(i, Instruction::X(_))));
        assert_eq!(c0.count_ops("cx"), 2 * 4 * 3);
        code.layout_check().unwrap();
    }

    #[test]
    fn derived_syndrome_examples() {
        assert_eq!(derived_final_syndrome_str("000", 3).unwrap(), "00");
        assert_eq!(derived_final_syndrome_str("111", 3).unwrap(), "00");
        assert_eq!(derived_final_syndrome_str("010", 3).unwrap(), "11");
        assert_eq!(derived_final_syndrome_str("011", 3).unwrap(), "10");
        assert!(derived_final_syndrome_str("01", 3).is_err());
    }

    #[test]
    fn processing_examples() {
        let layout = Layout::new(3, 2).unwrap();
        assert_eq!(layout.process("000 00 00").unwrap(), "0 0  00 00 00");
        assert_eq!(layout.process("111 00 10").unwrap(), "1 1  10 10 00");
        assert_eq!(layout.process("111 01 00").unwrap(), "1 1  00 01 01");
        assert_eq!(layout.process("111 10 00").unwrap(), "1 1  00 10 10");
        assert_eq!(layout.process("000 00 01").unwrap(), "0 0  01 01 00");
        assert!(matches!(
            layout.process("000 00 0"),
            Err(CodeError::Layout { .. })
        ));
        assert!(matches!(
            layout.process("000 00"),
            Err(CodeError::Layout { .. })
        ));
        assert!(matches!(
            layout.process("0a0 00 00"),
            Err(CodeError::Layout { .. })
        ));
    }

    #[test]
    fn single_x_on_middle_code_qubit() {
        let code = RepetitionCode::new(3, 1).unwrap();
        let loc = ErrorLocation::pauli(Position::PreCircuit, Pauli::X, code.code_qubits()[1]);
        let raw = run_with_errors(code.circuit(Logical::Zero), &[loc]).unwrap();
        assert_eq!(raw, "010 11");
    }

    #[test]
    fn record_flip_on_first_link_measurement() {
        let code = RepetitionCode::new(3, 1).unwrap();
        let c0 = code.circuit(Logical::Zero);
        let index = c0
            .instructions()
            .iter()
            .position(|i| matches!(i, Instruction::Measure { qubit, .. } if *qubit == code.link_qubits()[0]))
            .unwrap();
        let raw = run_with_errors(c0, &[ErrorLocation::record_flip(index)]).unwrap();
        assert_eq!(raw, "000 01");
    }

    #[test]
    fn location_count_matches_formula() {
        let code = RepetitionCode::new(3, 1).unwrap();
        let c0 = code.circuit(Logical::Zero);
        let touched: usize = c0
            .instructions()
            .iter()
            .map(|i| i.fault_qubits().len())
            .sum();
        let measures = c0.count_ops("measure");
        let expected = touched + c0.num_qubits() + measures;
        assert_eq!(enumerate_error_locations(c0).len(), expected);
        // 4 cx (2 qubits each), 2 link measures, 2 resets, 3 final measures
        assert_eq!(expected, 4 * 2 + 2 + 2 + 3 + 5 + 5);
    }

    #[test]
    fn processed_parse_inverts_rendering() {
        let layout = Layout::new(5, 2).unwrap();
        let bits = layout.parse_processed("0 1  0000 0001 0000").unwrap();
        let set: Vec<Node> = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| layout.node(i))
            .collect();
        assert_eq!(
            set,
            vec![
                Node::Logical(End::Right),
                Node::Syndrome { block: 2, link: 0 }
            ]
        );
        for bad in [
            "0 1 0000 0001 0000",
            "0 1  0000 0001",
            "01  0000 0001 0000",
            "0 1  000 0001 0000",
        ] {
            assert!(layout.parse_processed(bad).is_err(), "{bad}");
        }
        for i in 0..layout.node_count() {
            assert_eq!(layout.node_index(layout.node(i)), i);
        }
    }

    #[test]
    fn infer_layout_from_raw() {
        assert_eq!(
            Layout::infer_from_raw("000 00 00").unwrap(),
            Layout { n: 3, rounds: 2 }
        );
        assert!(Layout::infer_from_raw("000 0").is_err());
        assert!(Layout::infer_from_raw("000").is_err());
    }
}
