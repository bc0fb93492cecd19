//! Command-line interface. Exit codes: 0 connected / path found,
//! 1 disconnected / no path, 2 input or cap error, 3 verification mismatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use strongrecolor_core::classifier::brute_force_connected;
use strongrecolor_core::colouring::DEFAULT_CAP;
use strongrecolor_core::{
    build, certify_separation, classify, enumerate_proper, enumerate_strong, find_path, parse_colouring,
    validate_schedule, verify_certificate, Cap, Error, Graph, Mode, ReconfigGraph, Witness,
};

use crate::family::Family;
use crate::formats::{self, ComponentJson, FormatError, GraphJson, ScheduleJson, SeparationJson, VerdictJson};
use crate::{export, output};

#[derive(Debug, Parser)]
#[command(name = "strongrecolor", version, about = "Reconfiguration of strong k-colourings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named graph as JSON.
    Gen {
        #[arg(long, value_name = "SPEC")]
        family: Family,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Build the colour graph and report states, edges and components.
    Stats {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
    },
    /// List every state, one letter string per line (or JSON).
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Shortest recolouring schedule between two colourings, or a
    /// certificate that none exists.
    Plan {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        #[arg(long, value_name = "COLOURING")]
        from: String,
        #[arg(long, value_name = "COLOURING")]
        to: String,
        /// Re-check the emitted schedule or certificate.
        #[arg(long)]
        verify: bool,
    },
    /// Decide connectivity of S_k(G) and explain why.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Also build S_k(G) and fail with exit code 3 on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Export the colour graph as DOT, CSV or JSON.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["graph", "family"])]
pub struct Source {
    /// Graph JSON file: {"n": .., "edges": [[u, v], ..], "labels": [..]}.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// path:N, cycle:N, kmn:M,Q, star:M, psi:N, phi:P,Q or i.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<Family>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, short)]
    pub k: usize,
    /// Largest k^n the enumerator will attempt.
    #[arg(long, env = "STRONGRECOLOR_CAP", default_value_t = DEFAULT_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strong,
    Proper,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strong => Mode::Strong,
            ModeArg::Proper => Mode::Proper,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("writing output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch(_) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

/// Outcome of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Connected,
    Disconnected,
}

impl Status {
    fn from_connected(c: bool) -> Self {
        if c {
            Status::Connected
        } else {
            Status::Disconnected
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::Connected => ExitCode::SUCCESS,
            Status::Disconnected => ExitCode::from(1),
        }
    }
}

fn load(source: &Source) -> Result<Graph, CliError> {
    match (&source.graph, source.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Read { path: path.clone(), source: e })?;
            formats::read_graph(&text).map_err(|e| CliError::Parse { path: path.clone(), source: e })
        }
        (None, Some(f)) => Ok(f.build()?),
        (None, None) => Err(CliError::Usage("one of --graph or --family is required".into())),
    }
}

fn warn_small(g: &Graph, k: usize) {
    if g.n() < k + 1 {
        eprintln!("warning: {} vertices is fewer than k + 1 = {}; results outside the usual setting", g.n(), k + 1);
    }
}

fn warn_empty(rg: &ReconfigGraph) {
    if rg.state_count() == 0 {
        eprintln!(
            "warning: no {} {}-colourings exist; the empty state set counts as connected",
            if rg.mode() == Mode::Strong { "strong" } else { "proper" },
            rg.k()
        );
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

/// Human-readable stats block.
pub fn stats_report(rg: &ReconfigGraph) -> String {
    let summary = rg.component_summary();
    let mut out = format!(
        "{}, {}, {}\n",
        plural(rg.state_count(), "state"),
        plural(rg.edge_count(), "edge"),
        plural(summary.len(), "component")
    );
    if summary.len() > 1 {
        let first = summary[0];
        if summary.iter().all(|s| *s == first) {
            let shape = if first.is_cycle {
                format!("C_{}", first.size)
            } else if first.size == 1 {
                "isolated states".to_owned()
            } else {
                format!("of size {}", first.size)
            };
            let _ = writeln!(out, "all components {shape}");
        } else {
            let sizes: Vec<String> = summary.iter().map(|s| s.size.to_string()).collect();
            let _ = writeln!(out, "component sizes: {}", sizes.join(", "));
        }
    }
    out
}

fn out_path(common: &Common) -> Option<&Path> {
    common.out.as_deref()
}

pub fn run(cli: &Cli) -> Result<Status, CliError> {
    match &cli.command {
        Command::Gen { family, out } => {
            let g = family.build()?;
            output::emit(out.as_deref(), &formats::to_json(&GraphJson::from(&g)))?;
            Ok(Status::Connected)
        }
        Command::Stats { common, mode } => {
            let g = load(&common.source)?;
            warn_small(&g, common.k);
            let rg = build(&g, common.k, (*mode).into(), Cap(common.cap))?;
            warn_empty(&rg);
            print!("{}", stats_report(&rg));
            if let Some(path) = out_path(common) {
                let summary: Vec<ComponentJson> = rg.component_summary().iter().map(ComponentJson::from).collect();
                output::write_atomic(path, formats::to_json(&summary).as_bytes())?;
            }
            Ok(Status::from_connected(rg.is_connected()))
        }
        Command::Enumerate { common, mode, format } => {
            let g = load(&common.source)?;
            let cap = Cap(common.cap);
            let states = match Mode::from(*mode) {
                Mode::Strong => enumerate_strong(&g, common.k, cap)?,
                Mode::Proper => enumerate_proper(&g, common.k, cap)?,
            };
            let text = match format {
                None => states.iter().map(|c| c.letters() + "\n").collect(),
                Some(Format::Json) => {
                    formats::to_json(&states.iter().map(|c| c.colours().to_vec()).collect::<Vec<_>>())
                }
                Some(f) => return Err(CliError::Usage(format!("enumerate does not support --format {f:?}"))),
            };
            output::emit(out_path(common), &text)?;
            Ok(Status::Connected)
        }
        Command::Plan { common, mode, from, to, verify } => plan(common, (*mode).into(), from, to, *verify),
        Command::Classify { common, verify } => {
            let g = load(&common.source)?;
            warn_small(&g, common.k);
            let cap = Cap(common.cap);
            let verdict = classify(&g, common.k, cap)?;
            output::emit(out_path(common), &formats::to_json(&VerdictJson::from(&verdict)))?;
            if *verify {
                let brute = brute_force_connected(&g, common.k, cap)?;
                if brute != verdict.connected {
                    return Err(CliError::Mismatch(format!(
                        "{} says connected = {}, brute force says {}",
                        verdict.reason.as_str(),
                        verdict.connected,
                        brute
                    )));
                }
                if let Some(Witness::Separation { alpha, beta, certificate }) = &verdict.witness {
                    if !verify_certificate(&g, common.k, alpha, beta, certificate, cap) {
                        return Err(CliError::Mismatch(format!("{} certificate rejected", certificate.kind())));
                    }
                }
                eprintln!("verified: brute force agrees (connected = {brute})");
            }
            Ok(Status::from_connected(verdict.connected))
        }
        Command::Export { common, mode, format } => {
            let g = load(&common.source)?;
            let rg = build(&g, common.k, (*mode).into(), Cap(common.cap))?;
            warn_empty(&rg);
            let text = match format {
                Format::Dot => export::to_dot(&rg),
                Format::Csv => export::to_csv(&rg),
                Format::Json => export::to_json(&rg),
            };
            output::emit(out_path(common), &text)?;
            Ok(Status::Connected)
        }
    }
}

fn plan(common: &Common, mode: Mode, from: &str, to: &str, verify: bool) -> Result<Status, CliError> {
    let g = load(&common.source)?;
    let k = common.k;
    let cap = Cap(common.cap);
    let alpha = parse_colouring(from, k)?;
    let beta = parse_colouring(to, k)?;
    if let Some(schedule) = find_path(&g, k, &alpha, &beta, mode, cap)? {
        output::emit(out_path(common), &formats::to_json(&ScheduleJson::from(&schedule)))?;
        if verify {
            let end = validate_schedule(&g, k, &schedule, mode).map_err(|e| CliError::Mismatch(e.to_string()))?;
            if end != beta {
                return Err(CliError::Mismatch(format!("schedule ends at {end}, not {beta}")));
            }
        }
        eprintln!("schedule of {} from {alpha} to {beta}", plural(schedule.len(), "step"));
        return Ok(Status::Connected);
    }
    if mode == Mode::Proper {
        eprintln!("no path from {alpha} to {beta} in C_{k}; certificates cover strong mode only");
        return Ok(Status::Disconnected);
    }
    let cert = certify_separation(&g, k, &alpha, &beta, cap)?
        .ok_or_else(|| CliError::Mismatch("no path found but no certificate produced".into()))?;
    output::emit(out_path(common), &formats::to_json(&SeparationJson::new(&alpha, &beta, &cert)))?;
    if verify && !verify_certificate(&g, k, &alpha, &beta, &cert, cap) {
        return Err(CliError::Mismatch(format!("{} certificate rejected", cert.kind())));
    }
    eprintln!("no path from {alpha} to {beta}: {}", cert.kind());
    Ok(Status::Disconnected)
}
