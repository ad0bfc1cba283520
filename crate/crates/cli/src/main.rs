//! `asymprime` — run experiment programs and emit reports.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 spec validation failure,
//! 3 internal invariant breach.

use asymprime_cli::{emit_json, emit_tsv, run_text, RunError, RunOptions};
use clap::{Parser, Subcommand, ValueEnum};
use std::panic::AssertUnwindSafe;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "asymprime", version, about = "asymptotic prime divisors of monomial subquotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment program.
    Run {
        /// Program file in the experiment DSL.
        file: PathBuf,
        /// Override every analyze grid, e.g. `6` or `4,4`.
        #[arg(long)]
        grid: Option<String>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Cap on the L-chain length.
        #[arg(long)]
        r_max: Option<u32>,
        /// Consecutive equalities required to accept an L-chain value.
        #[arg(long)]
        r_window: Option<u32>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timing (makes output non-deterministic).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

const EXIT_USAGE: u8 = 1;
const EXIT_SPEC: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn parse_grid_flag(raw: &str) -> Result<Vec<u32>, String> {
    raw.split(',')
        .map(|part| part.trim().parse::<u32>().map_err(|_| format!("bad grid bound `{part}`")))
        .collect()
}

fn run(cmd: Command) -> ExitCode {
    let Command::Run { file, grid, format, r_max, r_window, out, timing } = cmd;

    let grid = match grid.as_deref().map(parse_grid_flag).transpose() {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let opts = RunOptions { grid, r_window, r_max, timing };
    let report = match run_text(&text, &opts) {
        Ok(report) => report,
        Err(RunError::Source(e)) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(EXIT_USAGE);
        }
        Err(RunError::Spec(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_SPEC);
        }
    };

    let rendered = match format {
        Format::Json => emit_json(&report),
        Format::Tsv => emit_tsv(&report),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2 on its own; usage problems are exit 1 here
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli.command))) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("error: internal invariant breach");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
