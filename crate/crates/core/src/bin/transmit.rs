use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use transmit::cli::{self, Format, Outcome, EXIT_USAGE};
use transmit::{SortKey, DEFAULT_MAX_VERTICES};

#[derive(Parser)]
#[command(
    name = "transmit",
    version,
    about = "Exact transmission of network topologies"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Table => Format::Table,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SortBy {
    Mean,
    Delta,
    Size,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression with the closed-form engine
    Eval {
        expr: String,
        /// Message rate per ordered pair of devices
        #[arg(long, requires = "time")]
        rate: Option<String>,
        /// Observation time
        #[arg(long, requires = "rate")]
        time: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Compare the closed form with a BFS over the built graph
    Verify {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Rank several topologies
    Compare {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value = "mean")]
        sort: SortBy,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Generating-function coefficients for perfect tree transmissions
    Series {
        #[arg(long)]
        arity: BigUint,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Distance histogram of the built graph
    Hist {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let outcome: Outcome = match args.command {
        Command::Eval {
            expr,
            rate,
            time,
            format,
        } => cli::run_eval(&expr, format.into(), rate.as_deref(), time.as_deref()),
        Command::Verify { expr, max_vertices } => cli::run_verify(&expr, max_vertices),
        Command::Compare {
            exprs,
            sort,
            format,
        } => {
            let key = match sort {
                SortBy::Mean => SortKey::MeanDistinct,
                SortBy::Delta => SortKey::Delta,
                SortBy::Size => SortKey::Size,
            };
            cli::run_compare(&exprs, key, format.into())
        }
        Command::Series {
            arity,
            terms,
            format,
        } => cli::run_series(&arity, terms, format.into()),
        Command::Hist {
            expr,
            max_vertices,
            format,
        } => cli::run_hist(&expr, max_vertices, format.into()),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
