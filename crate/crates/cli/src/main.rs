//! `curveclass`: classify equiclassical families and run curve computations
//! from JSON inputs.

mod commands;
mod table;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curveclass_core::Error;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "curveclass", version, about = "Equiclassical plane curve families and rational curves in projective space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

/// One of `--g --c`, `--n --k` or `--delta --kappa`, together with `--d`.
#[derive(Args, Debug, Clone)]
pub struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    #[arg(long, allow_hyphen_values = true, requires = "c", conflicts_with_all = ["n", "k", "delta", "kappa"])]
    pub g: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "g")]
    pub c: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "k", conflicts_with_all = ["delta", "kappa"])]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "kappa")]
    pub delta: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "delta")]
    pub kappa: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate every criterion on a family and its dual.
    Classify {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exponent in the quadratic local regularity bound.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=3))]
        lrq_exponent: u32,
    },
    /// Stratification graph of all admissible families of degree `d`.
    Strata {
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The dual triple `(c, g, d)` with the invariants of both sides.
    DualTriple {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// The `k`-th associated curve of a curve file.
    Associated {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: usize,
    },
    /// Degrees, ramification and Plücker residuals of a curve file.
    PlueckerCheck {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dual curve with bidual, symmetry and orthogonality checks.
    Dual {
        #[arg(long)]
        input: String,
        /// Print only the dual curve file.
        #[arg(long)]
        curve_only: bool,
    },
    /// Integrability of a frame file, with the recovered curve when it exists.
    Integrable {
        #[arg(long)]
        input: String,
    },
    /// Implicit equation and Plücker numbers of a plane curve file.
    Implicitize {
        #[arg(long)]
        input: String,
    },
    /// Cuspidal families `k = floor((d+3)^2/9)` and their duals.
    Sweep {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Failure with its exit status: 2 for invalid input, 3 for internal
/// inconsistencies.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            kind: e.kind(),
            code: if e.is_internal() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn invalid(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            code: 2,
        }
    }
}

fn print_failure(f: &Failure) {
    let body = json!({ "error": { "kind": f.kind, "message": f.message } });
    println!("{}", serde_json::to_string_pretty(&body).unwrap());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            print_failure(&Failure::invalid("usage", e.to_string().trim_end()));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            print_failure(&f);
            ExitCode::from(f.code)
        }
    }
}
