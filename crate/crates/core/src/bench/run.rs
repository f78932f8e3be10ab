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

use rayon::prelude::*;

use super::{ArchiveMetadata, BenchConfig, BenchError, ResultsArchive, SeedPurpose, Weighting};
use crate::code::{Logical, RawResults, RepetitionCode};
use crate::decode::{lookup_decode, DecoderKind, LogicalErrorReport, MatchingDecoder};
use crate::graph::{edge_probability_summary, weight_syndrome_graph, SyndromeGraph};
use crate::sim::{sample, NoiseModel};
use crate::stats::Summary;

/// Everything produced for one code size.
#[derive(Clone, Debug)]
pub struct CodeSizeRun {
    pub n: usize,
    pub rounds: usize,
    pub raw: RawResults,
    /// Reference runs used by the lookup decoder.
    pub table: Option<RawResults>,
    pub report: LogicalErrorReport,
    /// The graph with data-derived weights and edge statistics.
    pub weighted_graph: SyndromeGraph,
    pub edge_summary: Summary,
}

#[derive(Clone, Debug)]
pub struct BenchOutput {
    pub config: BenchConfig,
    pub archive: ResultsArchive,
    /// One run per code size, ordered by `n`.
    pub runs: Vec<CodeSizeRun>,
}

/// Options for decoding stored raw results.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOptions {
    pub decoder: DecoderKind,
    pub weighting: Weighting,
    pub max_defects: usize,
}

impl From<&BenchConfig> for DecodeOptions {
    fn from(config: &BenchConfig) -> Self {
        Self {
            decoder: config.decoder,
            weighting: config.weighting,
            max_defects: config.max_defects,
        }
    }
}

/// Samples both circuits of `code` with `shots` each.
pub fn sample_code(
    code: &RepetitionCode,
    noise: &NoiseModel,
    shots: u64,
    seed_for: impl Fn(Logical) -> u64,
) -> Result<RawResults, BenchError> {
    let mut results = RawResults::new();
    for label in Logical::BOTH {
        results.insert(
            label,
            sample(code.circuit(label), noise, shots, seed_for(label))?,
        );
    }
    Ok(results)
}

/// Processes and decodes raw results of `RepetitionCode(n, rounds)`.
///
/// Lookup decoding needs `table`. Edge statistics are always computed from
/// the logical-0 results; the matching decoder uses them as weights only
/// with [`Weighting::Data`].
pub fn decode_results(
    n: usize,
    rounds: usize,
    raw: &RawResults,
    table: Option<&RawResults>,
    options: &DecodeOptions,
) -> Result<(LogicalErrorReport, SyndromeGraph, Summary), BenchError> {
    let code = RepetitionCode::new(n, rounds)?;
    let processed = code.process_results(raw)?;
    let graph = SyndromeGraph::build(&code)?;
    let weighted = weight_syndrome_graph(&graph, &processed)?;
    let summary = edge_probability_summary(&weighted)?;
    let report = match options.decoder {
        DecoderKind::Lookup => {
            let table = table.ok_or_else(|| {
                BenchError::Config("lookup decoding needs a reference table".into())
            })?;
            lookup_decode(raw, table)
        }
        DecoderKind::Matching => {
            let graph = match options.weighting {
                Weighting::Unit => graph,
                Weighting::Data => weighted.clone(),
            };
            MatchingDecoder::new(graph).and_then(|d| {
                d.with_max_defects(options.max_defects)
                    .get_logical_prob(&processed)
            })
        }
    }
    .map_err(|source| BenchError::Decode { n, source })?;
    Ok((report, weighted, summary))
}

/// Samples, processes and decodes every code size in the configured range.
pub fn bench_run(config: &BenchConfig) -> Result<BenchOutput, BenchError> {
    config.validate()?;
    let noise = config.noise()?;
    let options = DecodeOptions::from(config);
    let runs = config
        .code_sizes()
        .into_par_iter()
        .map(|n| {
            let code = RepetitionCode::new(n, config.rounds)?;
            let raw = sample_code(&code, &noise, config.shots, |label| {
                config.derive_seed(n, label, SeedPurpose::Results)
            })?;
            let table = match config.decoder {
                DecoderKind::Lookup => {
                    Some(sample_code(&code, &noise, config.table_shots, |label| {
                        config.derive_seed(n, label, SeedPurpose::Table)
                    })?)
                }
                DecoderKind::Matching => None,
            };
            let (report, weighted_graph, edge_summary) =
                decode_results(n, config.rounds, &raw, table.as_ref(), &options)?;
            Ok(CodeSizeRun {
                n,
                rounds: config.rounds,
                raw,
                table,
                report,
                weighted_graph,
                edge_summary,
            })
        })
        .collect::<Result<Vec<_>, BenchError>>()?;

    let mut archive = ResultsArchive::new(ArchiveMetadata {
        created: None,
        source: "simulator".into(),
        config: Some(config.clone()),
    });
    for run in &runs {
        archive.insert(run.n, run.rounds, run.raw.clone())?;
    }
    Ok(BenchOutput {
        config: config.clone(),
        archive,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noiseless_run_has_no_errors() {
        let config = BenchConfig {
            shots: 100,
            ..Default::default()
        };
        let output = bench_run(&config).unwrap();
        assert_eq!(output.runs.len(), 1);
        let report = &output.runs[0].report;
        assert_eq!(report.probability(Logical::Zero), Some(0.0));
        assert_eq!(report.probability(Logical::One), Some(0.0));
        assert_eq!(
            output.archive.entries[&3]
                .results
                .get(Logical::One)
                .unwrap()
                .get("111 00"),
            100
        );
    }

    #[test]
    fn runs_are_ordered_and_reproducible() {
        let config = BenchConfig {
            n_min: 3,
            n_max: 6,
            rho_meas: 0.02,
            rho_gate: 0.02,
            shots: 500,
            seed: 11,
            weighting: Weighting::Data,
            ..Default::default()
        };
        let a = bench_run(&config).unwrap();
        let b = bench_run(&config).unwrap();
        assert_eq!(
            a.runs.iter().map(|r| r.n).collect::<Vec<_>>(),
            vec![3, 4, 5, 6]
        );
        assert_eq!(a.archive, b.archive);
        for (x, y) in a.runs.iter().zip(&b.runs) {
            assert_eq!(x.report, y.report);
        }
    }

    #[test]
    fn lookup_runs_keep_their_table() {
        let config = BenchConfig {
            decoder: DecoderKind::Lookup,
            rho_meas: 0.05,
            rho_gate: 0.05,
            shots: 200,
            table_shots: 400,
            ..Default::default()
        };
        let output = bench_run(&config).unwrap();
        let table = output.runs[0].table.as_ref().unwrap();
        assert_eq!(table.get(Logical::Zero).unwrap().total(), 400);
        assert_eq!(output.runs[0].report.decoder, DecoderKind::Lookup);
    }

    #[test]
    fn capacity_errors_name_the_code_size_and_string() {
        let config = BenchConfig {
            n_min: 7,
            n_max: 7,
            rounds: 2,
            rho_meas: 0.3,
            rho_gate: 0.3,
            shots: 200,
            max_defects: 2,
            ..Default::default()
        };
        match bench_run(&config) {
            Err(err @ BenchError::Decode { n: 7, .. }) => {
                assert!(err.to_string().contains("while decoding '"))
            }
            other => panic!("{other:?}"),
        }
    }
}
