//! `hwv`: evaluate tableau polynomials at symmetric tensors, build ABPs and generate instances.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    CrossCheck(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::CrossCheck(_) => 4,
        }
    }
}

impl From<hwv_core::io::FormatError> for CliError {
    fn from(e: hwv_core::io::FormatError) -> Self {
        CliError::Parse(e.to_string())
    }
}

macro_rules! precondition {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Precondition(e.to_string())
            }
        }
    )*};
}

precondition!(
    hwv_core::EvalError,
    hwv_core::abp::AbpError,
    hwv_core::tableau::TableauError,
    hwv_core::treedec::TreeDecError,
    hwv_core::reductions::ReductionError,
    hwv_core::AlgebraError
);

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Naive,
    Abp,
    Treewidth,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "hwv",
    version,
    about = "Highest weight vector evaluation through algebraic branching programs"
)]
struct Cli {
    /// Output format of the run report.
    #[arg(long, value_enum, default_value = "pretty", global = true)]
    format: Format,
    /// Worker threads; defaults to all cores.
    #[arg(long, env = "HWV_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a tableau polynomial at a Waring point or an ABP.
    Eval(EvalArgs),
    /// Noncommutative width of a polynomial (maximum flattening rank).
    Ncw(NcwArgs),
    /// Write the minimal ABP of a polynomial.
    Minabp(MinabpArgs),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Multiplicity of a shape as the rank of sampled evaluations.
    Multiplicity(MultiplicityArgs),
    /// Run the built-in acceptance and invariant checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub tableau: PathBuf,
    #[arg(long, conflicts_with = "abp", required_unless_present = "abp")]
    pub point: Option<PathBuf>,
    #[arg(long)]
    pub abp: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    /// Tree decomposition of the tableau graph; min-fill when absent.
    #[arg(long)]
    pub decomp: Option<PathBuf>,
    /// Drop bag vertices not needed to connect columns.
    #[arg(long)]
    pub minimize_bags: bool,
    /// Write the computation tree as JSON.
    #[arg(long)]
    pub dump_ct: Option<PathBuf>,
    /// Echoed in the report; evaluation is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct NcwArgs {
    #[arg(long)]
    pub poly: Option<PathBuf>,
    #[arg(long)]
    pub point: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MinabpArgs {
    #[arg(long)]
    pub poly: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Decision instance: nonzero iff the graph is 3-colorable.
    Coloring {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = hwv_core::reductions::DEFAULT_DECISION_DEGREE)]
        d: usize,
        #[arg(long)]
        out: String,
    },
    /// Counting instance over Q(ζ): the value is the number of 3-colorings.
    Counting {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = hwv_core::reductions::DEFAULT_COUNTING_DEGREE)]
        d: usize,
        #[arg(long)]
        out: String,
    },
    /// Doubled grid tableau with content (2k)² × 4 and a rank-two point.
    Grid {
        k: usize,
        #[arg(long)]
        out: String,
    },
    /// Sum of d-th powers of the forms (1, i, i², …).
    Vandermonde {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: String,
    },
}

#[derive(Debug, Args)]
pub struct MultiplicityArgs {
    /// Comma separated parts, e.g. 2,2.
    #[arg(long, value_delimiter = ',', required = true)]
    pub shape: Vec<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub m: usize,
    /// Sample points; defaults to the number of semistandard tableaux plus four.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also compute the exact value by symbolic expansion (tiny cases only).
    #[arg(long)]
    pub certify: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Ncw(a) => commands::ncw(a),
        Command::Minabp(a) => commands::minabp(a),
        Command::Gen(g) => commands::gen(g),
        Command::Multiplicity(a) => commands::multiplicity(a),
        Command::Selftest => commands::selftest(),
    };
    let mut report = match outcome {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.code());
        }
    };
    let failure = report.failure.take();
    if let Some(e) = &failure {
        eprintln!("error: {e}");
    }
    report.command = echo;
    report.set_time(start.elapsed());
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Pretty => println!("{}", report.to_pretty()),
    }
    match failure {
        Some(e) => ExitCode::from(e.code()),
        None => ExitCode::SUCCESS,
    }
}
