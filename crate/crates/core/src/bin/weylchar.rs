//! Command-line front end. Reports go to stdout as JSON (or CSV for the
//! character table), progress to stderr. Exit codes: 0 all checks pass,
//! 1 mismatch or computation failure, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use weylchar::cli::{self, Report};
use weylchar::fusion::FusionSpec;
use weylchar::lattice::DominantWeight;

#[derive(Parser)]
#[command(
    name = "weylchar",
    version,
    about = "Exact-arithmetic characters and basis enumeration for current-algebra Weyl modules",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the enumerated basis cardinality with the closed-form product
    Dim {
        /// Weight as comma-separated coefficients, e.g. "1,0,2"
        #[arg(long)]
        weight: String,
        /// Rank (defaults to the number of weight coefficients)
        #[arg(long)]
        rank: Option<usize>,
        /// Worker threads for the enumeration (1 = deterministic order, 0 = all cores)
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Graded character with the basis-aggregation cross-check
    Character {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Output format for the report (csv prints the character table only)
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Kostka decomposition check with index-normalization resolution
    Kostka {
        #[arg(long)]
        weight: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Fusion-product oracle: graded character, fermionic comparison, and
    /// optional point independence
    Fusion {
        /// Fusion description, e.g. "r=2; factors=w1@0,w1@1,w2@5"
        spec: String,
        /// Override the evaluation points, comma-separated
        #[arg(long)]
        points: Option<String>,
        /// Second point set for the independence check, comma-separated
        #[arg(long)]
        alt_points: Option<String>,
        /// Safety bound for the filtration grade
        #[arg(long, default_value_t = 100)]
        max_grade: usize,
    },
    /// Sweep every weight with rank <= max-rank and level <= max-level
    /// through the full battery of checks
    VerifyAll {
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        max_level: i64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 100)]
        max_grade: usize,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_weight(weight: &str, rank: Option<usize>) -> Result<DominantWeight, String> {
    let lambda: DominantWeight = weight
        .parse()
        .map_err(|e| format!("cannot parse weight {weight:?}: {e}"))?;
    if let Some(r) = rank {
        if r != lambda.rank() {
            return Err(format!(
                "rank {r} does not match the {} weight coefficients",
                lambda.rank()
            ));
        }
    }
    Ok(lambda)
}

fn parse_points(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad point {p:?}"))
        })
        .collect()
}

fn emit(report: &Report) -> ExitCode {
    println!("{}", cli::render(report));
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match args.command {
        Command::Dim {
            weight,
            rank,
            threads,
        } => match parse_weight(&weight, rank) {
            Ok(lambda) => emit(&cli::run_dim(&lambda, threads)),
            Err(e) => usage_error(&e),
        },
        Command::Character {
            weight,
            rank,
            format,
            threads,
        } => match parse_weight(&weight, rank) {
            Ok(lambda) => {
                let (report, csv) = cli::run_character(&lambda, threads);
                match format {
                    Format::Json => emit(&report),
                    Format::Csv => {
                        print!("{csv}");
                        ExitCode::from(report.exit_code() as u8)
                    }
                }
            }
            Err(e) => usage_error(&e),
        },
        Command::Kostka { weight, rank } => match parse_weight(&weight, rank) {
            Ok(lambda) => emit(&cli::run_kostka(&lambda)),
            Err(e) => usage_error(&e),
        },
        Command::Fusion {
            spec,
            points,
            alt_points,
            max_grade,
        } => {
            let parsed: FusionSpec = match spec.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(&format!("{e}")),
            };
            let parsed = match points {
                Some(text) => match parse_points(&text).and_then(|p| {
                    parsed
                        .with_points(&p)
                        .map_err(|e| format!("{e}"))
                }) {
                    Ok(s) => s,
                    Err(e) => return usage_error(&e),
                },
                None => parsed,
            };
            let alt = match alt_points.map(|t| parse_points(&t)).transpose() {
                Ok(a) => a,
                Err(e) => return usage_error(&e),
            };
            emit(&cli::run_fusion(&parsed, alt.as_deref(), max_grade))
        }
        Command::VerifyAll {
            max_rank,
            max_level,
            threads,
            max_grade,
        } => emit(&cli::run_verify_all(
            max_rank, max_level, threads, max_grade, true,
        )),
    }
}
