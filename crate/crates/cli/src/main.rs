//! `hodge`: exact Hodge integrals, identity checks and tables.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input or a
//! dimension violation, 3 an internal consistency check tripped.

/// println! that stays quiet when stdout is closed early (e.g. piped into `head`).
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hodge", version, about = "Exact Hodge integrals on moduli spaces of curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single integral and report how it was obtained.
    Integral(IntegralArgs),
    /// Run an identity suite and print a JSON report.
    Verify(VerifyArgs),
    /// Print a table of values over a parameter grid.
    Table(TableArgs),
    /// Print the τ-polynomial P_{g,μ}(τ) produced by the generating series.
    Series(SeriesArgs),
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("kind").required(true)))]
pub struct IntegralArgs {
    /// ∫ λ_g Π ψ_i^{k_i}; needs --g and --psi.
    #[arg(long, group = "kind")]
    pub lambda_g: bool,
    /// ∫ λ_g / Π(1 − μ_i ψ_i); needs --g and --mu.
    #[arg(long, group = "kind")]
    pub lambda_g_linear: bool,
    /// ∫ λ_1 λ_g ψ^{2g−3} on the one-pointed space; needs --g.
    #[arg(long = "lambda1-lambdag", group = "kind")]
    pub lambda1_lambdag: bool,
    /// The one-point λ_g ch ψ^m relation; needs --g and --m.
    #[arg(long, group = "kind")]
    pub thm32: bool,
    /// Top-degree part of ∫ λ_{g−1} / Π(1 − μ_i ψ_i); needs --g and --mu.
    #[arg(long = "lambda-gm1", group = "kind")]
    pub lambda_gm1: bool,
    #[arg(long)]
    pub g: u32,
    /// Comma-separated ψ exponents, e.g. 1,0,2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub psi: Option<Vec<i64>>,
    /// Partition, e.g. 2,1,1.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of the suite names listed by `hodge verify --help`.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(hodge_core::identities::IDENTITIES))]
    pub identity: String,
    #[arg(long)]
    pub gmax: Option<u32>,
    #[arg(long)]
    pub dmax: Option<u32>,
    #[arg(long)]
    pub nmax: Option<u32>,
    /// λ-order for the series-based suites.
    #[arg(long)]
    pub order: Option<i64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Bernoulli,
    Bg,
    #[value(name = "lambda1-lambdag")]
    Lambda1Lambdag,
    Thm32,
    #[value(name = "lambda-g")]
    LambdaG,
    #[value(name = "lambda-gm1")]
    LambdaGm1,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub family: Family,
    #[arg(long)]
    pub gmax: Option<u32>,
    /// Largest index for the Bernoulli table, or largest |μ| for partition tables.
    #[arg(long)]
    pub max: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub mu: String,
    /// Override the λ-truncation order of the generating series.
    #[arg(long)]
    pub lambda_order: Option<i64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Integral(a) => commands::integral(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Table(a) => commands::table(&a),
        Command::Series(a) => commands::series(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
