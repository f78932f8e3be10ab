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

//! Versioned JSON persistence of raw results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BenchConfig, BenchError};
use crate::code::{Layout, Logical, RawResults};

pub const ARCHIVE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ArchiveMetadata {
    /// Creation time, left empty unless requested so that repeated runs
    /// produce identical files.
    #[serde(default)]
    pub created: Option<String>,
    /// Free-form origin, e.g. `simulator` or the name of an ingested file.
    #[serde(default)]
    pub source: String,
    #[serde(default)]
    pub config: Option<BenchConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchiveEntry {
    pub rounds: usize,
    pub results: RawResults,
}

/// Raw results for a range of code sizes, keyed by `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultsArchive {
    pub format_version: u32,
    pub metadata: ArchiveMetadata,
    pub entries: BTreeMap<usize, ArchiveEntry>,
}

impl ResultsArchive {
    pub fn new(metadata: ArchiveMetadata) -> Self {
        Self {
            format_version: ARCHIVE_FORMAT_VERSION,
            metadata,
            entries: BTreeMap::new(),
        }
    }

    /// Adds the results for code size `n` after checking every outcome
    /// against the `(n, rounds)` layout.
    pub fn insert(
        &mut self,
        n: usize,
        rounds: usize,
        results: RawResults,
    ) -> Result<(), BenchError> {
        let entry = ArchiveEntry { rounds, results };
        validate_entry(n, &entry)?;
        self.entries.insert(n, entry);
        Ok(())
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.format_version != ARCHIVE_FORMAT_VERSION {
            return Err(BenchError::Validation(format!(
                "unsupported archive format version {} (expected {ARCHIVE_FORMAT_VERSION})",
                self.format_version
            )));
        }
        for (&n, entry) in &self.entries {
            validate_entry(n, entry)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("archive serialization cannot fail");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, BenchError> {
        let archive: Self = serde_json::from_str(text).map_err(|e| BenchError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        archive.validate()?;
        Ok(archive)
    }

    /// `true` when both archives hold the same outcome counts, ignoring
    /// metadata.
    pub fn same_counts(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|((n, a), (m, b))| n == m && a.results == b.results)
    }
}

fn validate_entry(n: usize, entry: &ArchiveEntry) -> Result<(), BenchError> {
    let layout = Layout::new(n, entry.rounds)
        .map_err(|e| BenchError::Validation(format!("entry n={n}: {e}")))?;
    for label in Logical::BOTH {
        if let Some(counts) = entry.results.get(label) {
            for outcome in counts.outcomes() {
                layout.check_raw(outcome).map_err(|e| {
                    BenchError::Validation(format!("entry n={n}, label '{label}': {e}"))
                })?;
            }
        }
    }
    Ok(())
}
