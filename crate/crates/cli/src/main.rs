use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

/// Perfect edge domination toolkit.
#[derive(Parser)]
#[command(name = "peds", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Auto,
    CubicClawFree,
    P5Free,
    Hfree,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Magnify,
    Subdivide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cubic,
    Inflate,
    Split,
    Magnify,
    Subdivide,
}

#[derive(Subcommand)]
pub enum Command {
    /// Minimum-weight PEDS of an instance.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        class: Class,
        /// Forbidden linear forest for `--class hfree`.
        #[arg(long)]
        h: Option<PathBuf>,
        /// Maximum degree for `--class hfree`.
        #[arg(long)]
        d: Option<usize>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Checks an edge set (`--edges 1-2,3-4`) or a P5 certificate (`--p5 1,2,3,4,5`).
    Verify {
        file: PathBuf,
        #[arg(long, conflicts_with = "p5")]
        edges: Option<String>,
        #[arg(long)]
        p5: Option<String>,
    },
    /// Lists every PEDS of a small instance.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = peds::oracle::DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Builds a hardness gadget, or checks its counting identity with `--check`.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        check: bool,
    },
    /// Dichotomy class of an H-free, max-degree-d problem.
    Classify {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Generates an instance in the `p edge` format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        /// Base cubic graph: K4, prism, petersen, or a file.
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Clique size for `split` (default about sqrt(2n)).
        #[arg(long)]
        clique: Option<usize>,
        /// Edge probability between clique and independent side for `split`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Random weights `lo:hi` (write `--weights=-5:5` for a negative `lo`);
        /// unit weights otherwise.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Times a solver over doubling instance sizes.
    Bench {
        suite: String,
        /// Comma-separated sizes; defaults depend on the suite.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::EXIT_ERROR)
        }
    }
}
