//! `lcgraph` command-line interface: graph, power-scan, code, scheme,
//! formulas, and corpus subcommands emitting JSON (or CSV) reports.

mod report;
mod run;

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "lcgraph",
    version,
    about = "Log-concavity analysis of graphical sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file: JSON {"n":..,"edges":[[u,v],..]} or text "n m" + edge list
    #[arg(long, conflicts_with = "family")]
    pub file: Option<String>,
    /// Named family spec, e.g. petersen, cycle:5, hamming:3,2, theorem1:5
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CapFlags {
    /// Max number of codewords enumerated
    #[arg(long, default_value_t = 10_000_000)]
    pub cap_codewords: u128,
    /// Max number of cosets enumerated
    #[arg(long, default_value_t = 1_000_000)]
    pub cap_cosets: u128,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Distance profiles, DDR/DR verdicts, intersection array, log-concavity
    Graph {
        #[command(flatten)]
        input: GraphInput,
        /// Base vertex for the reported profile
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Emit the profile as CSV instead of a JSON report
        #[arg(long)]
        csv: bool,
    },
    /// Scan Cartesian powers for the minimal log-concave exponent
    PowerScan {
        #[command(flatten)]
        input: GraphInput,
        /// Base vertex of the profile polynomial
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Largest exponent scanned
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        /// Emit the scan rows as CSV instead of a JSON report
        #[arg(long)]
        csv: bool,
    },
    /// Weight distribution, projectivity, cosets, and the coset graph
    Code {
        /// Code file: first line "q n k", then k generator rows
        #[arg(long)]
        file: String,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Spectrum, Krein parameters, Property M, multiplicity log-concavity
    Scheme {
        /// Intersection-array file: JSON {"b":[..],"c":[..]}
        #[arg(long, conflicts_with_all = ["relations", "family"])]
        array: Option<String>,
        /// Relation-matrix file: JSON list of dense 0/1 matrices
        #[arg(long, conflicts_with = "family")]
        relations: Option<String>,
        /// Named distance-regular graph, analyzed via its distance relations
        #[arg(long)]
        family: Option<String>,
        /// Float-mode comparison tolerance
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Closed-form valency/multiplicity families over a parameter grid
    Formulas {
        /// Family name: hamming, johnson, johnson-multiplicities,
        /// folded-johnson, odd-graph, grassmann, symplectic, bilinear
        family: String,
        /// Inclusive range "lo..hi" or single value, once per parameter
        #[arg(long, required = true)]
        params: Vec<String>,
        /// Emit scan rows as CSV instead of a JSON report
        #[arg(long)]
        csv: bool,
    },
    /// Run every entry of a JSON manifest, isolating per-entry failures
    Corpus {
        /// Manifest file: JSON array of subcommand-shaped entries
        manifest: String,
        #[command(flatten)]
        caps: CapFlags,
        /// Float-mode comparison tolerance for scheme entries
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
