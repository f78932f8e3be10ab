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
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use repcode::bench::{
    bench_run, decode_results, edge_stats_text, emit_reports, ingest_dict_literal, report_rows,
    reports_csv, reports_json, to_dict_literal, write_file, BenchError, DecodeOptions, EmitOptions,
    ResultsArchive,
};
use repcode::code::{Layout, ProcessedResults, RepetitionCode};
use repcode::decode::{DecoderKind, MatchingDecoder};
use repcode::graph::{edge_probability_summary, weight_syndrome_graph, SyndromeGraph};

use crate::args::{
    ArchiveFormat, BenchArgs, Command, DecodeArgs, GraphArgs, GraphFormat, IngestArgs, ProcessArgs,
    StatsArgs,
};
use crate::error::CliError;

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Bench(args) => bench(args),
        Command::Process(args) => process(args),
        Command::Decode(args) => decode(args),
        Command::Graph(args) => graph(args),
        Command::Ingest(args) => ingest(args),
        Command::Stats(args) => stats(args),
    }
}

fn read(path: &Path) -> Result<String, BenchError> {
    fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_archive(path: &Path) -> Result<ResultsArchive, BenchError> {
    ResultsArchive::from_json(&read(path)?)
}

fn print(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a failure exit.
    let _ = out.write_all(text.as_bytes());
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, text)?,
        None => print(text),
    }
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), CliError> {
    let config = args.config();
    config.validate()?;
    if args.layout_check {
        for n in config.code_sizes() {
            RepetitionCode::new(n, config.rounds)
                .map_err(BenchError::from)?
                .layout_check()
                .map_err(CliError::LayoutCheck)?;
        }
    }
    let mut output = bench_run(&config)?;
    if args.timestamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        output.archive.metadata.created = Some(format!("unix:{secs}"));
    }
    let rows = report_rows(output.runs.iter().map(|r| (r.n, &r.report)));
    print(&reports_csv(&rows));
    if let Some(dir) = &args.out {
        let options = EmitOptions {
            dot: args.dot,
            plot_script: args.plot_script,
        };
        for path in emit_reports(dir, &output, options)? {
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn process(args: ProcessArgs) -> Result<(), CliError> {
    if let Some(path) = &args.archive {
        let archive = read_archive(path)?;
        let mut processed: BTreeMap<usize, ProcessedResults> = BTreeMap::new();
        for (&n, entry) in &archive.entries {
            let code = RepetitionCode::new(n, entry.rounds).map_err(BenchError::from)?;
            processed.insert(
                n,
                code.process_results(&entry.results)
                    .map_err(BenchError::from)?,
            );
        }
        let mut text =
            serde_json::to_string_pretty(&processed).expect("processed results serialize");
        text.push('\n');
        print(&text);
        return Ok(());
    }
    let mut text = String::new();
    for raw in &args.raw {
        let layout = Layout::infer_from_raw(raw).map_err(BenchError::from)?;
        text.push_str(&layout.process(raw).map_err(BenchError::from)?);
        text.push('\n');
    }
    print(&text);
    Ok(())
}

fn decode(args: DecodeArgs) -> Result<(), CliError> {
    if let Some(processed) = &args.processed {
        let (n, rounds) = (args.n.unwrap_or_default(), args.rounds.unwrap_or_default());
        let code = RepetitionCode::new(n, rounds).map_err(BenchError::from)?;
        let graph = SyndromeGraph::build(&code).map_err(BenchError::from)?;
        let decoded = MatchingDecoder::new(graph)
            .and_then(|d| d.with_max_defects(args.max_defects).decode(processed))
            .map_err(|source| BenchError::Decode { n, source })?;
        print(&format!("{decoded}\n"));
        return Ok(());
    }

    let path = args
        .archive
        .as_deref()
        .expect("argument parser requires an archive");
    let archive = read_archive(path)?;
    let options = DecodeOptions {
        decoder: args.decoder.into(),
        weighting: args.weighting.into(),
        max_defects: args.max_defects,
    };
    let table = match (options.decoder, &args.table) {
        (DecoderKind::Lookup, Some(path)) => Some(read_archive(path)?),
        (DecoderKind::Lookup, None) => {
            return Err(CliError::Usage("lookup decoding needs --table".into()));
        }
        (DecoderKind::Matching, _) => None,
    };
    let mut reports = Vec::new();
    let mut summaries = Vec::new();
    for (&n, entry) in &archive.entries {
        let table_entry = match &table {
            Some(t) => Some(
                &t.entries
                    .get(&n)
                    .ok_or_else(|| {
                        BenchError::Validation(format!("lookup table has no entry for n={n}"))
                    })?
                    .results,
            ),
            None => None,
        };
        let (report, _, summary) =
            decode_results(n, entry.rounds, &entry.results, table_entry, &options)?;
        reports.push((n, report));
        summaries.push((n, summary));
    }
    let rows = report_rows(reports.iter().map(|(n, r)| (*n, r)));
    let csv = reports_csv(&rows);
    print(&csv);
    if let Some(dir) = &args.out {
        write_file(&dir.join("results.csv"), &csv)?;
        write_file(
            &dir.join("results.json"),
            &reports_json(archive.metadata.config.as_ref(), &rows),
        )?;
        write_file(
            &dir.join("edge_stats.txt"),
            &edge_stats_text(summaries.iter().map(|(n, s)| (*n, s))),
        )?;
    }
    Ok(())
}

fn graph(args: GraphArgs) -> Result<(), CliError> {
    let code = RepetitionCode::new(args.n, args.rounds).map_err(BenchError::from)?;
    let mut graph = SyndromeGraph::build(&code).map_err(BenchError::from)?;
    if let Some(path) = &args.archive {
        let archive = read_archive(path)?;
        let entry = archive
            .entries
            .get(&args.n)
            .filter(|e| e.rounds == args.rounds)
            .ok_or_else(|| {
                BenchError::Validation(format!(
                    "archive has no entry for n={}, rounds={}",
                    args.n, args.rounds
                ))
            })?;
        let processed = code
            .process_results(&entry.results)
            .map_err(BenchError::from)?;
        graph = weight_syndrome_graph(&graph, &processed).map_err(BenchError::from)?;
    }
    let text = match args.export {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => graph.to_json(),
    };
    emit(&text, args.out.as_deref())
}

fn ingest(args: IngestArgs) -> Result<(), CliError> {
    let text = read(&args.input)?;
    let mut archive = match args.format {
        ArchiveFormat::Json => ResultsArchive::from_json(&text)?,
        ArchiveFormat::DictLiteral => ingest_dict_literal(&text, args.rounds)?,
    };
    if args.format == ArchiveFormat::DictLiteral {
        archive.metadata.source = args.input.display().to_string();
    }
    let rendered = match args.to {
        ArchiveFormat::Json => archive.to_json(),
        ArchiveFormat::DictLiteral => to_dict_literal(&archive) + "\n",
    };
    emit(&rendered, args.out.as_deref())
}

fn stats(args: StatsArgs) -> Result<(), CliError> {
    let archive = read_archive(&args.archive)?;
    let mut summaries = Vec::new();
    for (&n, entry) in archive
        .entries
        .iter()
        .filter(|(&n, _)| args.n.is_none_or(|m| m == n))
    {
        let code = RepetitionCode::new(n, entry.rounds).map_err(BenchError::from)?;
        let processed = code
            .process_results(&entry.results)
            .map_err(BenchError::from)?;
        let graph = SyndromeGraph::build(&code).map_err(BenchError::from)?;
        let weighted = weight_syndrome_graph(&graph, &processed).map_err(BenchError::from)?;
        summaries.push((
            n,
            edge_probability_summary(&weighted).map_err(BenchError::from)?,
        ));
    }
    if summaries.is_empty() {
        return Err(BenchError::Validation("no matching entries in the archive".into()).into());
    }
    print(&edge_stats_text(summaries.iter().map(|(n, s)| (*n, s))));
    Ok(())
}
