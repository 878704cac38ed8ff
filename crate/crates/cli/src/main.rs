mod cli;
mod commands;
mod report;

use std::io::Write as _;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;
use sgcrit::frustration::SolveOptions;
use sgcrit::structure::DecomposeCaps;

use cli::{Cli, Command};
use report::{Failure, Report};

fn run(cli: &Cli) -> Result<Report, Failure> {
    let budget = match cli.budget {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => {
            return Err(Failure {
                kind: "malformed-input",
                message: format!("budget must be a non-negative number of seconds, got {s}"),
                detail: serde_json::Value::Null,
            })
        }
        None => None,
    };
    let opts = SolveOptions::default().with_budget(budget);
    match &cli.command {
        Command::Gen { family, k, output } => commands::gen(*family, *k, output.as_deref()),
        Command::Frustration {
            file,
            all_signatures,
            method,
        } => commands::frustration(file, *all_signatures, *method, &opts),
        Command::Balance { file } => commands::balance(file),
        Command::Critical { file, criticality, cuts } => commands::critical(file, *criticality, *cuts, &opts),
        Command::Sstar { file, circuit_cap } => commands::sstar(file, *circuit_cap, &opts),
        Command::Classify { file } => commands::classify(file, &opts),
        Command::Decompose {
            file,
            max_edges,
            max_index,
        } => commands::decompose(
            file,
            DecomposeCaps {
                max_edges: *max_edges,
                max_index: *max_index,
            },
            &opts,
        ),
        Command::Reduce { file, output } => commands::reduce(file, output.as_deref(), &opts),
        Command::VerifyWall { file, circuit_cap } => commands::verify_wall(file, *circuit_cap, &opts),
    }
}

/// Writes to stdout; a reader that went away early is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                emit(&(report.to_json() + "\n"));
            } else if let Some(p) = &report.payload {
                emit(p);
            } else {
                emit(&report.text);
            }
            ExitCode::from(report.exit_code())
        }
        Err(f) => {
            if cli.json {
                emit(&(f.to_json(cli.command.name()) + "\n"));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(2)
        }
    }
}
