//! `halphen`: differential invariants, ODE duality and canonical forms of
//! formal arcs from the command line.

mod commands;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use halphen::Error;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "halphen",
    version,
    about = "Exact differential invariants of formal arcs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Input file, or `-` for stdin.
    #[arg(short, long, global = true)]
    input: Option<String>,

    /// Inline JSON input instead of a file.
    #[arg(long = "json", global = true, conflicts_with = "input")]
    inline: Option<String>,

    /// Truncation precision; overrides the precision declared in the input.
    #[arg(long, env = "HALPHEN_PRECISION", global = true)]
    precision: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Slice {
    B,
    Mu3,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Plücker coordinates, gap sequence, Monge value and expressions.
    Invariants {
        /// Expression in the U_λ, e.g. "U^2*U_3 - 3*U*U_1*U_2"; repeatable.
        #[arg(short, long = "expr")]
        exprs: Vec<String>,
        /// Largest partition weight in the U_λ table.
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
    },
    /// Convert between an arc and its linear ODE.
    Ode {
        /// Input is an ODE; output its solution arc.
        #[arg(
            long,
            conflicts_with = "from_arc",
            required_unless_present = "from_arc"
        )]
        to_arc: bool,
        /// Input is an arc; output its ODE.
        #[arg(long)]
        from_arc: bool,
    },
    /// Adjoint operator, Gram matrix and the duality check.
    Adjoint,
    /// Reduce an arc to a canonical slice.
    Canonical {
        #[arg(long, value_enum, default_value_t = Slice::B)]
        slice: Slice,
        /// Complete an inexact μ₃ normalization in floating point.
        #[arg(long)]
        float: bool,
    },
    /// Monge invariant by formula and by the geometric constructions.
    Monge,
    /// Run the seeded property suites.
    Check {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Instances per suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Corrupt a proportionality constant; the run must then fail.
        #[arg(long)]
        corrupt_constant: bool,
    },
}

/// A command's result in both renderings.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    pub success: bool,
}

fn read_input(cli: &Cli) -> Result<String, Error> {
    if let Some(text) = &cli.inline {
        return Ok(text.clone());
    }
    match cli.input.as_deref() {
        None => Err(Error::Input(
            "no input: pass -i PATH, -i - or --json TEXT".into(),
        )),
        Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {path}: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let p = cli.precision;
    match &cli.command {
        Command::Invariants { exprs, max_weight } => {
            commands::invariants(&read_input(cli)?, p, exprs, *max_weight)
        }
        Command::Ode { to_arc, .. } => {
            if *to_arc {
                commands::ode_to_arc(&read_input(cli)?, p)
            } else {
                commands::arc_to_ode(&read_input(cli)?, p)
            }
        }
        Command::Adjoint => commands::adjoint(&read_input(cli)?, p),
        Command::Canonical { slice, float } => {
            commands::canonical(&read_input(cli)?, p, *slice, *float)
        }
        Command::Monge => commands::monge(&read_input(cli)?, p),
        Command::Check {
            seed,
            samples,
            corrupt_constant,
        } => Ok(commands::check(*seed, *samples, *corrupt_constant)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                ),
                Format::Text => print!("{}", report.text),
            }
            if report.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => eprintln!(
                    "{}",
                    json!({"error": {"code": e.code(), "message": e.to_string()}})
                ),
                Format::Text => eprintln!("error[{}]: {e}", e.code()),
            }
            ExitCode::from(2)
        }
    }
}
