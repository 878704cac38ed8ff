use std::path::PathBuf;

use clap::{Parser, Subcommand};
use sgcrit::criticality::CriticalityMethod;
use sgcrit::families::FamilyKind;
use sgcrit::frustration::Method;

#[derive(Debug, Parser)]
#[command(name = "sgcrit", version, about = "Frustration index and criticality of signed graphs")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Wall-clock budget in seconds for branch and bound.
    #[arg(long, global = true, env = "SGCRIT_BUDGET", value_name = "SECONDS")]
    pub budget: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a member of a named family.
    Gen {
        family: FamilyKind,
        /// Size parameter, where the family takes one.
        #[arg(long)]
        k: Option<usize>,
        /// Output file; `.json` selects the JSON form. Defaults to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Frustration index with a minimum signature.
    Frustration {
        file: PathBuf,
        /// Also list every minimum signature.
        #[arg(long)]
        all_signatures: bool,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    /// Balance verdict with a switch set or a negative circuit.
    Balance { file: PathBuf },
    /// Criticality verdict; exits 1 if the graph is not critical.
    Critical {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        criticality: CriticalityMethod,
        /// Report an equilibrated cut through every edge outside the witness.
        #[arg(long)]
        cuts: bool,
    },
    /// Structure checks for S*; exits 1 if one fails.
    Sstar {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        circuit_cap: usize,
    },
    /// Names the irreducible graph behind a 1- or 2-critical graph.
    Classify { file: PathBuf },
    /// Searches for a decomposition into critical parts.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_edges: usize,
        #[arg(long, default_value_t = 4)]
        max_index: usize,
    },
    /// Suppresses vertices until the graph is irreducible.
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Checks a wall: cubic, index equal to the number of negative edges,
    /// critical and in S*.
    VerifyWall {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        circuit_cap: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Frustration { .. } => "frustration",
            Command::Balance { .. } => "balance",
            Command::Critical { .. } => "critical",
            Command::Sstar { .. } => "sstar",
            Command::Classify { .. } => "classify",
            Command::Decompose { .. } => "decompose",
            Command::Reduce { .. } => "reduce",
            Command::VerifyWall { .. } => "verify-wall",
        }
    }
}
