//! `icg-energy`: exact `h_p` evaluation, minimizer search, theorem checks,
//! balancing sequences and spectral energies from the command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 refused by a gate or guard,
//! 4 a verification failed.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use icg_core::StructureFilter;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "icg-energy", version, about = "Energy-maximal divisor sets of integral circulant graphs on p^s vertices")]
struct Cli {
    /// digits after the decimal point in rounded renderings
    #[arg(long, global = true, default_value_t = 5)]
    digits: u32,
    /// output format; csv is available for `verify`
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// indent JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate h_p and the energy of one tuple
    Hp(HpArgs),
    /// Find the minimizers of h_p over a candidate set
    Search(SearchArgs),
    /// Compare brute-force minimizers with the structural predictions
    Verify(VerifyArgs),
    /// Print the balancing sequence of a delta vector
    Lambda(LambdaArgs),
    /// Spectrum and energy of a gcd graph
    Energy(EnergyArgs),
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("vector").required(true).args(["delta", "a"])))]
pub struct HpArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: u32,
    /// delta vector, comma separated
    #[arg(long, value_delimiter = ',')]
    delta: Option<Vec<u32>>,
    /// admissible exponent tuple, comma separated
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<u32>>,
}

fn parse_filter(s: &str) -> Result<StructureFilter, String> {
    s.parse().map_err(|e: icg_core::Error| e.to_string())
}

#[derive(Debug, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    r: u32,
    /// all, biv, bivstar or sepstar
    #[arg(long, default_value = "all", value_parser = parse_filter)]
    #[serde(serialize_with = "filter_name")]
    filter: StructureFilter,
    /// worker threads
    #[arg(long, env = "ICG_ENERGY_JOBS")]
    jobs: Option<usize>,
    /// number of distinct best values to report
    #[arg(long, default_value_t = 1)]
    top: usize,
    /// look for the largest values of h_p instead
    #[arg(long)]
    maximize: bool,
}

fn filter_name<S: serde::Serializer>(f: &StructureFilter, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(f.name())
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("target").required(true).args(["sweep", "p"])))]
pub struct VerifyArgs {
    #[arg(long, requires_all = ["s", "r"])]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    s: Option<u32>,
    #[arg(long, requires = "p")]
    r: Option<u32>,
    /// `smin..smax,rmin..rmax,p1,p2,...` with inclusive ranges
    #[arg(long, conflicts_with_all = ["p", "s", "r"])]
    sweep: Option<String>,
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("source").required(true).args(["delta", "full_from"])))]
pub struct LambdaArgs {
    /// delta vector, comma separated
    #[arg(long, value_delimiter = ',')]
    delta: Option<Vec<u32>>,
    /// search first, then report the sequences of the best tuples
    #[arg(long, requires_all = ["p", "s", "r"])]
    full_from: bool,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value = "all", value_parser = parse_filter)]
    #[serde(serialize_with = "filter_name")]
    filter: StructureFilter,
    #[arg(long, default_value_t = 1)]
    top: usize,
    #[arg(long, env = "ICG_ENERGY_JOBS")]
    jobs: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
#[command(group(ArgGroup::new("sets").required(true).args(["divisors", "all_subsets"])))]
pub struct EnergyArgs {
    #[arg(long)]
    n: u64,
    /// proper divisors of n, comma separated
    #[arg(long, value_delimiter = ',')]
    divisors: Option<Vec<u64>>,
    /// extremal energies over all nonempty sets of proper divisors
    #[arg(long)]
    all_subsets: bool,
    /// largest number of proper divisors accepted with --all-subsets
    #[arg(long, default_value_t = icg_core::spectral::DEFAULT_DIVISOR_GUARD)]
    guard: usize,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<icg_core::Error> for Failure {
    fn from(e: icg_core::Error) -> Self {
        use icg_core::Error as E;
        let code = match e {
            E::FilterRefused(_) | E::GuardExceeded(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure { code: 0, message: String::new() };
        }
        Failure {
            code: 1,
            message: format!("cannot write output: {e}"),
        }
    }
}

pub struct Settings {
    pub digits: u32,
    pub format: Format,
    pub pretty: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        digits: cli.digits,
        format: cli.format,
        pretty: cli.pretty,
    };
    if settings.format == Format::Csv && !matches!(cli.command, Command::Verify(_)) {
        eprintln!("error: --format csv is only available for verify");
        return ExitCode::from(2);
    }
    let outcome = match &cli.command {
        Command::Hp(args) => commands::hp(args, &settings),
        Command::Search(args) => commands::search(args, &settings),
        Command::Verify(args) => commands::verify(args, &settings),
        Command::Lambda(args) => commands::lambda(args, &settings),
        Command::Energy(args) => commands::energy(args, &settings),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
