//! `flagpos`: command-line access to the flagpos constructions and
//! experiments. Reports are JSON by default, CSV with `--format csv`.

mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit status for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    CheckFailed = 1,
    InputError = 2,
    ResourceBound = 3,
    NotInterval = 4,
    NotPluckerPositive = 5,
}

/// An error carrying the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure::new(Status::InputError, message)
    }
}

impl From<flagpos::Error> for Failure {
    fn from(e: flagpos::Error) -> Self {
        let status = match e {
            flagpos::Error::Resource(_) => Status::ResourceBound,
            flagpos::Error::State(_) => Status::CheckFailed,
            flagpos::Error::Argument(_) | flagpos::Error::Parse(_) => Status::InputError,
        };
        Failure::new(status, e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "flagpos", version, about = "Total positivity and Plücker positivity in partial flag varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct OutputOpts {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Plücker vectors and Plücker class of a flag file.
    Pluecker {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Plücker class together with a Lusztig positivity status.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Verified totally positive matrix representing a Plücker-positive
    /// flag on an interval K.
    Witness {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Completion of a Plücker-positive flag on an interval K.
    Complete {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Signed cyclic shift of a flag.
    Shift {
        file: PathBuf,
        #[arg(long)]
        eps: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build a counterexample flag with its obstruction certificate.
    Counterexample {
        #[arg(value_enum)]
        kind: CounterexampleKind,
        #[arg(long)]
        n: usize,
        #[arg(long = "K")]
        dims: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        eps: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a family of checks and report PASS/FAIL per check.
    Verify(VerifyArgs),
    /// Cell-to-stratum injectivity report for (n, K).
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long = "K")]
        dims: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Vertices of the Bruhat interval polytope of a cell.
    Bip {
        #[arg(long)]
        n: usize,
        #[arg(long = "K")]
        dims: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CounterexampleKind {
    Converse,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Plücker positivity vs total positivity, by K.
    Converse,
    /// Cyclic shifts.
    Cyclic,
    /// Cells vs matroid strata.
    Decompositions,
    /// Bruhat interval polytopes as Minkowski sums.
    Minkowski,
    /// Fekete criterion soundness on random totally positive matrices.
    Fekete,
    /// f(t) is totally positive and moves nonnegative flags to positive ones.
    Perturb,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub n: usize,
    /// Comma list such as `1,3`, or `all` for every nonempty K.
    #[arg(long = "K", default_value = "all")]
    pub dims: String,
    #[arg(long)]
    pub eps: Option<usize>,
    /// Rational parameter for `perturb`, e.g. `1/2`.
    #[arg(long, default_value = "1/2")]
    pub t: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random trials for randomized checks; 200 for `fekete`,
    /// 50 otherwise.
    #[arg(long)]
    pub count: Option<usize>,
    #[command(flatten)]
    pub output: OutputOpts,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::InputError as u8 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(status) => ExitCode::from(status as u8),
        Err(f) => {
            eprintln!("flagpos: {}", f.message);
            ExitCode::from(f.status as u8)
        }
    }
}
