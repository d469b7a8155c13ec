use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyhex::{
    index_record, parse_range, report_json, sweep_csv, sweep_rows, to_dot, to_json, ExactJson,
    GridRange,
};
use polyhex_core::{
    build_nanotube, fit_closed_form, verify_paper_forms, Index, NanotubeKind, NanotubeSpec,
    DEFAULT_FIT_SAMPLES,
};
use serde::Serialize;

/// Polyhex nanotube graphs and their degree-based topological indices.
#[derive(Debug, Parser)]
#[command(name = "polyhex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Armchair,
    Zigzag,
}

impl From<Kind> for NanotubeKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Armchair => NanotubeKind::Armchair,
            Kind::Zigzag => NanotubeKind::Zigzag,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindSelection {
    Armchair,
    Zigzag,
    Both,
}

impl KindSelection {
    fn kinds(self) -> Vec<NanotubeKind> {
        match self {
            KindSelection::Armchair => vec![NanotubeKind::Armchair],
            KindSelection::Zigzag => vec![NanotubeKind::Zigzag],
            KindSelection::Both => NanotubeKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexChoice {
    Azi,
    Randic,
    Abc,
    All,
}

impl IndexChoice {
    fn indices(self) -> Vec<Index> {
        match self {
            IndexChoice::Azi => vec![Index::Azi],
            IndexChoice::Randic => vec![Index::Randic],
            IndexChoice::Abc => vec![Index::Abc],
            IndexChoice::All => Index::ALL.to_vec(),
        }
    }
}

fn indices_of(choices: &[IndexChoice]) -> Vec<Index> {
    let mut out: Vec<Index> = choices.iter().flat_map(|c| c.indices()).collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the nanotube graph as DOT or JSON.
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Print vertex/edge counts and the degree partition.
    Partition {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Print counts, partition and index values as JSON.
    Index {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "all")]
        index: IndexChoice,
    },
    /// Fit a·mn + b·m exactly to brute-force AZI values.
    Fit {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Sample point `m:n`; repeat for more. Defaults to 2:1 2:2 3:1 3:2.
        #[arg(long = "sample", value_parser = parse_sample)]
        samples: Vec<(u32, u32)>,
    },
    /// Compare the published AZI closed forms with the oracle on a grid.
    /// Exit status 1 if any stated form is inconsistent.
    Verify {
        #[arg(long, value_enum, default_value = "both")]
        kind: KindSelection,
        #[arg(long, value_parser = parse_range, default_value = "2:12")]
        m_range: GridRange,
        #[arg(long, value_parser = parse_range, default_value = "1:12")]
        n_range: GridRange,
    },
    /// Write a CSV of counts and indices over a grid.
    Sweep {
        #[arg(long, value_enum, default_value = "both")]
        kind: KindSelection,
        #[arg(long, value_parser = parse_range, default_value = "2:12")]
        m_range: GridRange,
        #[arg(long, value_parser = parse_range, default_value = "1:12")]
        n_range: GridRange,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        indices: Vec<IndexChoice>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_sample(s: &str) -> Result<(u32, u32), String> {
    let (m, n) = s
        .split_once(':')
        .ok_or_else(|| format!("expected m:n, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(m)?, parse(n)?))
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn spec_of(kind: Kind, m: u32, n: u32) -> Result<NanotubeSpec, Failure> {
    NanotubeSpec::new(kind.into(), m, n).map_err(usage)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(usage)?;
    writeln!(out).map_err(usage)
}

#[derive(Serialize)]
struct PartitionRecord {
    kind: String,
    m: u32,
    n: u32,
    vertex_count: usize,
    edge_count: usize,
    partition: Vec<polyhex::record::PartitionClass>,
}

#[derive(Serialize)]
struct FitRecord {
    kind: String,
    index: String,
    provenance: String,
    a: ExactJson,
    b: ExactJson,
    samples: Vec<(u32, u32)>,
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { kind, m, n, format } => {
            let spec = spec_of(kind, m, n)?;
            let g = build_nanotube(&spec);
            match format {
                GraphFormat::Dot => {
                    let mut out = std::io::stdout().lock();
                    out.write_all(to_dot(&spec, &g).as_bytes()).map_err(usage)?;
                }
                GraphFormat::Json => print_json(&to_json(&spec, &g))?,
            }
        }
        Command::Partition { kind, m, n } => {
            let spec = spec_of(kind, m, n)?;
            let rec = index_record(&spec, &[]).map_err(usage)?;
            print_json(&PartitionRecord {
                kind: rec.kind,
                m: rec.m,
                n: rec.n,
                vertex_count: rec.vertex_count,
                edge_count: rec.edge_count,
                partition: rec.partition,
            })?;
        }
        Command::Index { kind, m, n, index } => {
            let spec = spec_of(kind, m, n)?;
            print_json(&index_record(&spec, &index.indices()).map_err(usage)?)?;
        }
        Command::Fit { kind, samples } => {
            let samples = if samples.is_empty() {
                DEFAULT_FIT_SAMPLES.to_vec()
            } else {
                samples
            };
            let form = fit_closed_form(kind.into(), Index::Azi, &samples).map_err(usage)?;
            print_json(&FitRecord {
                kind: form.kind.name().to_string(),
                index: form.index.to_string(),
                provenance: form.provenance.name().to_string(),
                a: form.a.into(),
                b: form.b.into(),
                samples,
            })?;
        }
        Command::Verify {
            kind,
            m_range,
            n_range,
        } => {
            let report = verify_paper_forms(&kind.kinds(), m_range.as_range(), n_range.as_range())
                .map_err(usage)?;
            for f in &report.forms {
                log::info!("{}: {}", f.form, f.verdict.name());
            }
            print_json(&report_json(&report, m_range, n_range))?;
            if !report.paper_stated_consistent() {
                return Ok(1);
            }
        }
        Command::Sweep {
            kind,
            m_range,
            n_range,
            indices,
            out,
        } => {
            let rows = sweep_rows(&kind.kinds(), m_range, n_range, &indices_of(&indices))
                .map_err(usage)?;
            let bytes = sweep_csv(&rows).map_err(usage)?;
            std::fs::write(&out, bytes)
                .map_err(|e| usage(format!("cannot write {}: {e}", out.display())))?;
            log::info!("wrote {} rows to {}", rows.len(), out.display());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
