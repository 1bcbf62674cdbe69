//! `liftcheck`: run scripts, reproduce the built-in corpus, print Gröbner bases.
//!
//! Exit status: 0 on success (whatever the verdicts), 1 when a corpus
//! fixture disagrees with its recorded outcome, 2 on input errors, 3 when an
//! internal invariant is violated.

mod corpus;
mod dsl;
mod error;
mod report;
mod script;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use liftcheck_core::groebner::{self, Limits};

use crate::dsl::Script;
use crate::error::CliError;
use crate::script::Options;

#[derive(Parser)]
#[command(name = "liftcheck", version, about = "Decide weak liftability of cyclic modules over hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script and print its JSON report.
    Run {
        file: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Abort Gröbner computations whose pair degree exceeds this bound.
        #[arg(long)]
        max_degree: Option<u64>,
        /// Per-task time limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Include wall-clock times (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Recompute the built-in examples and compare with their recorded outcomes.
    Corpus {
        #[arg(long, conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        /// Only list fixture names.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Print the reduced Gröbner basis of every ideal declared in a script.
    Gb { file: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(CliError::from)
}

fn emit(json: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, format!("{json}\n"))?,
        None => println!("{json}"),
    }
    Ok(())
}

fn run(file: &Path, out: Option<&Path>, opts: Options) -> Result<i32, CliError> {
    let src = read(file)?;
    let outcome = script::run(&src, &opts)?;
    emit(&serde_json::to_string_pretty(&outcome.report).expect("report serializes"), out)?;
    for (index, e) in &outcome.errors {
        let t = &outcome.report.tasks[*index];
        eprintln!("error: task {index} ({}, line {}): {e}", t.kind, t.line);
    }
    Ok(outcome.exit_code())
}

fn corpus(name: Option<String>, all: bool, list: bool, timing: bool) -> Result<i32, CliError> {
    if list || (name.is_none() && !all) {
        for f in corpus::FIXTURES {
            println!("{}", f.name);
        }
        return Ok(0);
    }
    let chosen: Vec<_> = match name {
        Some(n) => match corpus::find(&n) {
            Some(f) => vec![f],
            None => {
                eprintln!("error: unknown corpus fixture `{n}`; try `liftcheck corpus --list`");
                return Ok(2);
            }
        },
        None => corpus::FIXTURES.iter().collect(),
    };
    let rep = corpus::run(&chosen, timing);
    println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
    let mut code = 0;
    for f in &rep.fixtures {
        eprintln!("{}: {}", f.name, if f.passed { "ok" } else { "MISMATCH" });
        if !f.passed {
            code = 1;
            if let Some(e) = &f.error {
                eprintln!("  error: {e}");
            }
            for c in f.checks.iter().filter(|c| !c.holds()) {
                eprintln!("  {}: expected {}, observed {}", c.label, c.expected, c.observed);
            }
        }
    }
    Ok(code)
}

fn gb(file: &Path) -> Result<i32, CliError> {
    let script = Script::parse(&read(file)?)?;
    let env = script::declarations(&script)?;
    for (ring, name, i) in env.ideals() {
        let basis = i.gb()?;
        println!("{name} in {ring}: {} elements", basis.len());
        for g in basis.elements() {
            println!("  {g}");
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { file, json, max_degree, timeout, timing } => {
            let timeout = match timeout.map(Duration::try_from_secs_f64).transpose() {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: --timeout: {e}");
                    return ExitCode::from(2);
                }
            };
            run(&file, json.as_deref(), Options { timing, max_degree, timeout })
        }
        Command::Corpus { name, all, list, timing } => corpus(name, all, list, timing),
        Command::Gb { file } => {
            groebner::set_limits(Limits::default());
            gb(&file)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
