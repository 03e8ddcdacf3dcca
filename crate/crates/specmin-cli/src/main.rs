//! Batch command surface: construct minimizers, run kernel searches, list
//! main trees, run oracle comparisons, and re-derive the published tables as
//! a verification suite.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod output;
mod verify;

#[derive(Parser)]
#[command(name = "specmin", version, about = "minimum spectral radius search for given order and independence number")]
struct Cli {
    /// Worker threads (default: SPECMIN_JOBS or all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Numeric screening tolerance (exact verdicts never depend on it)
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Graph6,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Trees,
    Connected,
}

#[derive(Args)]
struct OutputArg {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the minimizer graphs of order n with independence number n-k
    Minimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Exhaustive kernel search at the base order for (k, r)
    Kernel {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Enumerate the candidate main trees for k
    MainTrees {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Brute-force minimizers over all trees or all connected graphs
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_enum, default_value_t = Space::Trees)]
        space: Space,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Re-derive published results and fail on any mismatch
    Verify {
        /// one of: tables-1to4, k5, k6, oracle-small
        #[arg(long)]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::env::var("SPECMIN_JOBS").ok().and_then(|v| v.parse().ok()));
    if let Some(jobs) = jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: could not size the worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    if !(cli.tol > 0.0) {
        eprintln!("error: --tol must be positive");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Minimize { n, k, output } => output::run_minimize(n, k, cli.tol, output.output),
        Command::Kernel { k, r, output } => output::run_kernel(k, r, cli.tol, output.output),
        Command::MainTrees { k, output } => output::run_main_trees(k, output.output),
        Command::Oracle { n, alpha, space, output } => output::run_oracle(
            n,
            alpha,
            match space {
                Space::Trees => specmin_core::oracle::SearchSpace::Trees,
                Space::Connected => specmin_core::oracle::SearchSpace::Connected,
            },
            output.output,
        ),
        Command::Verify { suite } => verify::run_suite(&suite),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
