use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use phifib::{Algorithm, ReportFormat};
use phifib_cli::{bench, compute, render_table, run_selftest, OutputFormat};

const USAGE_ERROR: u8 = 2;

/// Exact Fibonacci and Lucas numbers by square-and-multiply on (a + b*sqrt(5))/2.
#[derive(Debug, Parser)]
#[command(name = "phifib", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print F(n), or L(n) with --lucas.
    Compute {
        n: u64,
        /// iterative, lucas-linear, pair-fast, doubling, matrix or float
        #[arg(long, default_value = "pair-fast")]
        algo: Algorithm,
        /// dec, hex, digits or last:K
        #[arg(long, default_value = "dec")]
        format: OutputFormat,
        #[arg(long)]
        lucas: bool,
    },
    /// Print n, the floating-point estimate phi^n/sqrt(5), and F(n).
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: u64,
    },
    /// Time and count operations for every algorithm/index combination.
    Bench {
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// Comma-separated algorithm ids.
        #[arg(long, value_delimiter = ',', required = true)]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        repeats: u32,
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check all algorithms and invariants.
    Selftest {
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("phifib: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { n, algo, format, lucas } => match compute(n, algo, format, lucas) {
            Ok(line) => {
                println!("{line}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Table { max_n } => match render_table(max_n) {
            Ok(table) => {
                print!("{table}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Bench { n, algos, repeats, format, out } => {
            let report = match bench(&n, &algos, repeats, format) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, report) {
                        return fail(format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{report}"),
            }
            ExitCode::SUCCESS
        }
        Command::Selftest { depth } => {
            let outcomes = run_selftest(depth);
            for o in &outcomes {
                match &o.failure {
                    None => println!("PASS  {}", o.name),
                    Some(case) => println!("FAIL  {}: {case}", o.name),
                }
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            println!("{} of {} checks passed", outcomes.len() - failed, outcomes.len());
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
