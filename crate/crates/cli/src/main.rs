//! `gassoc`: generate graphs, enumerate search trees, compute rotation
//! distances and diameters, run theorem checks and parameter sweeps.
//!
//! Exit codes: 0 on success, 1 on invalid input or a failed check, 2 when a
//! size cap is exceeded. Errors are also printed to stderr as one JSON line.

mod commands;
mod input;
mod output;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "gassoc", version, about = "Search trees on graphs and graph associahedron diameters")]
pub struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Leave out elapsed-time fields so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Format {
    /// Print JSON records instead of a table.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Print CSV, to FILE when given.
    #[arg(long, value_name = "FILE", num_args = 0..=1)]
    pub csv: Option<Option<PathBuf>>,
}

#[derive(Args, Debug, Clone)]
pub struct Caps {
    /// Maximum number of search trees to materialize.
    #[arg(long, default_value_t = 5_000_000)]
    pub cap: u64,
    /// Maximum estimated memory in bytes.
    #[arg(long, default_value_t = 8 << 30)]
    pub max_memory: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph as an edge list, or JSON with --json.
    Gen {
        /// Graph spec such as `split:3,4` or `ladder:8`.
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Count the search trees of a graph, optionally listing them.
    Enumerate {
        /// Graph spec or graph file.
        graph: String,
        /// List every tree.
        #[arg(long)]
        all: bool,
        /// Refuse to list more trees than this.
        #[arg(long, default_value_t = 5_000_000)]
        cap: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Exact rotation distance between two trees, with a shortest sequence.
    Distance {
        graph: String,
        /// Tree as `root; v:parent, ...`, `order: v v ...`, JSON, or a file.
        tree_a: String,
        tree_b: String,
        /// Maximum number of trees the search may store.
        #[arg(long, default_value_t = 20_000_000)]
        max_visited: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Exact diameter of the rotation graph.
    Diameter {
        graph: String,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        format: Format,
    },
    /// Run theorem checks by id, or `all`.
    Verify {
        id: String,
        /// Multiplier on sample sizes.
        #[arg(long)]
        scale: Option<f64>,
        /// Seed for all sampled instances.
        #[arg(long)]
        seed: Option<u64>,
        /// TOML file with check parameters.
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Parameter sweeps that compare formulas, constructions and exact search.
    Sweep {
        #[command(subcommand)]
        kind: sweep::SweepKind,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            output::report_error("usage", e.to_string().trim_end());
            return ExitCode::from(1);
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            output::report_error("usage", "--threads must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            output::report_error("usage", e.to_string().trim_end());
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let code = match e.downcast_ref::<gassoc::Error>() {
                Some(err) if err.is_cap() => {
                    output::report_error("cap_exceeded", &format!("{e:#}"));
                    2
                }
                Some(_) => {
                    output::report_error("invalid_input", &format!("{e:#}"));
                    1
                }
                None => {
                    output::report_error("error", &format!("{e:#}"));
                    1
                }
            };
            ExitCode::from(code)
        }
    }
}
