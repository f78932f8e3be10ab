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

use std::collections::BTreeMap;

use super::{DecodeError, DecoderKind, LabelOutcome, LogicalErrorReport};
use crate::code::{Layout, Logical, RawResults};
use crate::sim::Counts;

/// Decodes `raw` by comparing each outcome's frequency under the reference
/// runs in `table`.
///
/// An outcome decodes to whichever value saw it more often in the table.
/// Equal frequencies, including outcomes the table never saw, count as half
/// an error.
pub fn lookup_decode(
    raw: &RawResults,
    table: &RawResults,
) -> Result<LogicalErrorReport, DecodeError> {
    let first = table
        .iter()
        .flat_map(|(_, c)| c.outcomes())
        .next()
        .ok_or(DecodeError::EmptyTable)?;
    let layout = Layout::infer_from_raw(first)?;
    for (_, counts) in table.iter().chain(raw.iter()) {
        for s in counts.outcomes() {
            layout.check_raw(s)?;
        }
    }

    let empty = Counts::new();
    let zero = table.get(Logical::Zero).unwrap_or(&empty);
    let one = table.get(Logical::One).unwrap_or(&empty);
    let mut labels = BTreeMap::new();
    for (label, counts) in raw.iter() {
        let (mut misdecoded, mut ties) = (0, 0);
        for (s, count) in counts.iter() {
            match lookup_decode_outcome(s, zero, one) {
                Some(decoded) if decoded != label => misdecoded += count,
                Some(_) => {}
                None => ties += count,
            }
        }
        labels.insert(label, LabelOutcome::new(misdecoded, ties, counts.total()));
    }
    Ok(LogicalErrorReport {
        decoder: DecoderKind::Lookup,
        labels,
    })
}

/// Decoded value of one outcome, or `None` on a tie.
pub fn lookup_decode_outcome(outcome: &str, zero: &Counts, one: &Counts) -> Option<Logical> {
    let (c0, c1) = (zero.get(outcome), one.get(outcome));
    match c0.cmp(&c1) {
        std::cmp::Ordering::Greater => Some(Logical::Zero),
        std::cmp::Ordering::Less => Some(Logical::One),
        std::cmp::Ordering::Equal => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn results(zero: &[(&str, u64)], one: &[(&str, u64)]) -> RawResults {
        let mut r = RawResults::new();
        r.insert(Logical::Zero, zero.iter().cloned().collect());
        r.insert(Logical::One, one.iter().cloned().collect());
        r
    }

    #[test]
    fn majority_outcomes_decode_cleanly() {
        let table = results(
            &[("000 00", 90), ("001 01", 10)],
            &[("111 00", 95), ("001 01", 5)],
        );
        let raw = results(&[("000 00", 10)], &[("111 00", 10)]);
        let report = lookup_decode(&raw, &table).unwrap();
        assert_eq!(report.probability(Logical::Zero), Some(0.0));
        assert_eq!(report.probability(Logical::One), Some(0.0));
        assert_eq!(report.decoder, DecoderKind::Lookup);
    }

    #[test]
    fn misdecoded_outcomes_count_fully() {
        let table = results(
            &[("000 00", 90), ("001 01", 3)],
            &[("111 00", 95), ("001 01", 5)],
        );
        let raw = results(&[("000 00", 6), ("001 01", 4)], &[]);
        let report = lookup_decode(&raw, &table).unwrap();
        assert_eq!(report.labels[&Logical::Zero].misdecoded, 4);
        assert_eq!(report.probability(Logical::Zero), Some(0.4));
    }

    #[test]
    fn ties_and_unseen_outcomes_count_half() {
        let table = results(
            &[("000 00", 90), ("001 01", 5)],
            &[("111 00", 95), ("001 01", 5)],
        );
        let raw = results(&[("000 00", 6), ("001 01", 2), ("010 11", 2)], &[]);
        let outcome = lookup_decode(&raw, &table).unwrap().labels[&Logical::Zero];
        assert_eq!(outcome.ties, 4);
        assert_eq!(outcome.probability, 0.2);
    }

    #[test]
    fn empty_table_and_layout_mismatch_are_rejected() {
        let raw = results(&[("000 00", 1)], &[]);
        assert_eq!(
            lookup_decode(&raw, &RawResults::new()),
            Err(DecodeError::EmptyTable)
        );
        let table = results(&[("000 00 00", 1)], &[]);
        assert!(matches!(
            lookup_decode(&raw, &table),
            Err(DecodeError::Layout(_))
        ));
    }
}
