mod labels;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use s4bell::{CgMatrix, OrbitSet, S4Model};

#[derive(Parser)]
#[command(
    name = "s4bell",
    version,
    about = "Bell and Tsirelson-like bounds for orbits of the S4 standard representation"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Output file; for `scan`, the directory receiving scan.json, scan.csv and scan.txt.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run every model self-check and compare with the published eigenvalue table.
    Verify {
        /// Flip one CG entry before checking (negative control).
        #[arg(long, hide = true)]
        corrupt_cg: bool,
    },
    /// Eigenvalues of X(g̃, v) for all 24 elements.
    Table2,
    /// Classical and quantum bounds for one orbit or a pair of orbits.
    Bound {
        /// Orbit labels as (α,l) or one-line permutations, e.g. "(2,2) (7,2)".
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Cycle decomposition of a pair of orbits.
    Cycles {
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Census of all single orbits and all pairs.
    Scan {
        /// Worker threads (0 uses all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// CHSH classical and quantum values.
    Chsh,
}

enum Failure {
    Usage(String),
    Invariant(String),
    Runtime(String),
}

impl From<s4bell::Error> for Failure {
    fn from(e: s4bell::Error) -> Self {
        match e {
            s4bell::Error::Io(m) => Failure::Runtime(m),
            s4bell::Error::NotAHomomorphism(_) | s4bell::Error::NotNormalized(_) => {
                Failure::Invariant(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn orbit_set(args: &[String], want_pair: bool) -> Result<OrbitSet, Failure> {
    let perms = labels::parse_labels(args)?;
    match (perms.len(), want_pair) {
        (2, true) | (1 | 2, false) => Ok(OrbitSet::new(perms)?),
        (n, true) => Err(Failure::Usage(format!(
            "expected two orbit labels, got {n}"
        ))),
        (n, false) => Err(Failure::Usage(format!(
            "expected one or two orbit labels, got {n}"
        ))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = cli.out.as_deref();
    let fmt = cli.format;
    match cli.command {
        Command::Verify { corrupt_cg } => {
            let mut cg = CgMatrix::<f64>::standard();
            if corrupt_cg {
                cg.0 .0[4][2] = -cg.0 .0[4][2];
            }
            let model = S4Model::with_cg(cg)?;
            let checks = s4bell::run_checks(&model);
            emit(out, &render::checks(&checks, fmt)?)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Failure::Invariant(format!(
                    "{failed} of {} checks failed",
                    checks.len()
                )));
            }
        }
        Command::Table2 => {
            let model = S4Model::build()?;
            emit(
                out,
                &render::table(&s4bell::verify::eigenvalue_table(&model), fmt)?,
            )?;
        }
        Command::Bound { labels } => {
            let set = orbit_set(&labels, false)?;
            let model = S4Model::build()?;
            let report = s4bell::Report::compute(&model, &set)?;
            emit(out, &render::bound(&report, fmt)?)?;
        }
        Command::Cycles { labels } => {
            let set = orbit_set(&labels, true)?;
            let model = S4Model::build()?;
            emit(out, &render::cycles(&model, &set, fmt)?)?;
        }
        Command::Scan { workers } => {
            let model = S4Model::build()?;
            let report = s4bell::scan_all(&model, workers)?;
            let dir = out.unwrap_or(Path::new("."));
            report.write_all(dir)?;
            let text = match fmt {
                Format::Text => report.summary(),
                Format::Json => report.to_json()? + "\n",
                Format::Csv => report.to_csv()?,
            };
            emit(None, &text)?;
        }
        Command::Chsh => emit(out, &render::chsh(fmt)?)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) | Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
