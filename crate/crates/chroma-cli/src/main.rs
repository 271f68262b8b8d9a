//! Batch command-line surface: membership checks, structure-aware
//! coloring, fixture generation, and benchmarking.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain negative
//! (not in class, invalid spec), 3 search budget or size guard.

mod report;
mod run;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chroma", version, about = "Coloring engine for (P7,C4,C5)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum BoundArg {
    /// ⌈11ω/9⌉, the general bound
    #[value(name = "11/9")]
    ElevenNinths,
    /// ⌈7ω/6⌉, for bracelets and the reduced blowup families
    #[value(name = "7/6")]
    SevenSixths,
    /// exact chromatic number via the oracles
    #[value(name = "exact")]
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Commands {
    /// Check class membership of a DIMACS graph or spec JSON
    Check {
        /// Input path (.col or .json)
        path: PathBuf,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Color an instance and emit the coloring plus a run report
    Color {
        /// Input path (.col or .json)
        path: PathBuf,
        /// Bound the coloring must meet
        #[arg(long, default_value = "11/9")]
        bound: BoundArg,
        /// Re-verify the coloring and fail loudly if improper
        #[arg(long)]
        verify: bool,
        /// Also compute the exact chromatic number and report the gap
        #[arg(long)]
        oracle: bool,
        /// Write the coloring here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a fixture for a named family
    Gen {
        /// Family name (c7_equal, c7_plus_v, c7_plus_2t, c7_plus_2f,
        /// e_minus_8, gx, special_emerald, emerald_random, emerald_equal,
        /// bracelet_random)
        family: String,
        /// Family parameters as key=value pairs
        params: Vec<String>,
        /// Generator seed; all randomness flows through it
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the fixture here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color every fixture in a directory and report
    Bench {
        /// Directory of fixture JSON files
        dir: PathBuf,
        /// Report format
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let outcome = match cli.command {
        Commands::Check { path, json } => run::cmd_check(&path, json),
        Commands::Color { path, bound, verify, oracle, out } => {
            run::cmd_color(&path, bound, verify, oracle, out.as_deref())
        }
        Commands::Gen { family, params, seed, out } => {
            run::cmd_gen(&family, &params, seed, out.as_deref())
        }
        Commands::Bench { dir, format } => run::cmd_bench(&dir, format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
