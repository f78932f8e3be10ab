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

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use repcode::bench::{BenchConfig, Weighting};
use repcode::decode::{DecoderKind, DEFAULT_MAX_DEFECTS};

#[derive(Debug, Parser)]
#[command(
    name = "repcode",
    version,
    about = "Repetition-code benchmarks on a noisy bit-level simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample, decode and report logical error probabilities over a range of code sizes
    Bench(BenchArgs),
    /// Convert raw outcome strings into processed strings
    Process(ProcessArgs),
    /// Decode stored results, or a single processed string
    Decode(DecodeArgs),
    /// Build the syndrome graph of a code and export it
    Graph(GraphArgs),
    /// Read a saved results file and write it as an archive
    Ingest(IngestArgs),
    /// Summarize data-derived edge probabilities of stored results
    Stats(StatsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecoderArg {
    Lookup,
    Matching,
}

impl From<DecoderArg> for DecoderKind {
    fn from(arg: DecoderArg) -> Self {
        match arg {
            DecoderArg::Lookup => DecoderKind::Lookup,
            DecoderArg::Matching => DecoderKind::Matching,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightingArg {
    Unit,
    Data,
}

impl From<WeightingArg> for Weighting {
    fn from(arg: WeightingArg) -> Self {
        match arg {
            WeightingArg::Unit => Weighting::Unit,
            WeightingArg::Data => Weighting::Data,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArchiveFormat {
    Json,
    DictLiteral,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 3)]
    pub n_min: usize,
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    #[arg(long, default_value_t = 1)]
    pub n_step: usize,
    /// Syndrome-measurement rounds
    #[arg(long, default_value_t = 1)]
    pub rounds: usize,
    /// Readout flip probability
    #[arg(long, default_value_t = 0.0)]
    pub rho_meas: f64,
    /// Depolarizing probability after each gate
    #[arg(long, default_value_t = 0.0)]
    pub rho_gate: f64,
    /// Shots per encoded value
    #[arg(long, default_value_t = 1024)]
    pub shots: u64,
    /// Shots per encoded value for the lookup table
    #[arg(long, default_value_t = 10_000)]
    pub table_shots: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = DecoderArg::Matching)]
    pub decoder: DecoderArg,
    #[arg(long, value_enum, default_value_t = WeightingArg::Unit)]
    pub weighting: WeightingArg,
    /// Largest defect set the exact matching solver accepts
    #[arg(long, default_value_t = DEFAULT_MAX_DEFECTS)]
    pub max_defects: usize,
    /// Directory for archive, reports and statistics
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a DOT file of each weighted syndrome graph
    #[arg(long)]
    pub dot: bool,
    /// Also write a matplotlib script plotting the CSV
    #[arg(long)]
    pub plot_script: bool,
    /// Record the creation time in the archive (makes output run-dependent)
    #[arg(long)]
    pub timestamp: bool,
    /// Check that each code has 2(n-1)T cx gates before sampling
    #[arg(long)]
    pub layout_check: bool,
}

impl BenchArgs {
    pub fn config(&self) -> BenchConfig {
        BenchConfig {
            n_min: self.n_min,
            n_max: self.n_max,
            n_step: self.n_step,
            rounds: self.rounds,
            rho_meas: self.rho_meas,
            rho_gate: self.rho_gate,
            shots: self.shots,
            table_shots: self.table_shots,
            seed: self.seed,
            decoder: self.decoder.into(),
            weighting: self.weighting.into(),
            max_defects: self.max_defects,
        }
    }
}

#[derive(Debug, Args)]
pub struct ProcessArgs {
    /// Raw outcome strings such as "111 01 00"
    #[arg(required_unless_present = "archive", conflicts_with = "archive")]
    pub raw: Vec<String>,
    /// Process every outcome of a JSON archive instead
    #[arg(long)]
    pub archive: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// JSON archive of raw results
    #[arg(
        long,
        required_unless_present = "processed",
        conflicts_with = "processed"
    )]
    pub archive: Option<PathBuf>,
    /// JSON archive of reference results for lookup decoding
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// A single processed string to decode with unit weights
    #[arg(long, requires_all = ["n", "rounds"])]
    pub processed: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, value_enum, default_value_t = DecoderArg::Matching)]
    pub decoder: DecoderArg,
    #[arg(long, value_enum, default_value_t = WeightingArg::Unit)]
    pub weighting: WeightingArg,
    #[arg(long, default_value_t = DEFAULT_MAX_DEFECTS)]
    pub max_defects: usize,
    /// Directory for the CSV, JSON and statistics files
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub rounds: usize,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub export: GraphFormat,
    /// Weight edges from the logical-0 results for this code in a JSON archive
    #[arg(long)]
    pub archive: Option<PathBuf>,
    /// Output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ArchiveFormat::Json)]
    pub format: ArchiveFormat,
    /// Rounds for every entry, instead of inferring them from the outcomes
    #[arg(long)]
    pub rounds: Option<usize>,
    #[arg(long, value_enum, default_value_t = ArchiveFormat::Json)]
    pub to: ArchiveFormat,
    /// Output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// JSON archive of raw results
    #[arg(long)]
    pub archive: PathBuf,
    /// Restrict to one code size
    #[arg(long)]
    pub n: Option<usize>,
}
