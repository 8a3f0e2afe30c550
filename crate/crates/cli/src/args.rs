use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Zeros of Dirichlet L-functions and the sum of L'(rho, chi) over them.
#[derive(Debug, Parser)]
#[command(name = "lzeros", version)]
pub struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Dirichlet characters mod q with their canonical labels
    Characters {
        #[arg(long)]
        modulus: u64,
        /// Print JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Print gamma_0, gamma_1, eta_0, eta_1 and B_0..B_12 as JSON
    Constants {
        /// Also print a1, a2 for this modulus
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Evaluate L(s, chi) and L'(s, chi) at one point, as JSON
    Eval {
        #[command(flatten)]
        chi: CharSelector,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = EvalMethod::Hurwitz)]
        method: EvalMethod,
    },
    /// Locate critical-line zeros in (tmin, tmax] and certify the count
    Zeros {
        #[command(flatten)]
        chi: CharSelector,
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 0.0)]
        tmin: f64,
        #[command(flatten)]
        scan: ScanArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the zero sum against the asymptotic main term on a grid of T
    Compare {
        #[arg(long)]
        modulus: u64,
        /// Character index k or label q.k
        #[arg(
            long = "char",
            conflicts_with = "all_primitive",
            required_unless_present = "all_primitive"
        )]
        character: Option<String>,
        /// Run every primitive character mod q
        #[arg(long)]
        all_primitive: bool,
        /// Comma-separated increasing heights
        #[arg(long, value_delimiter = ',', required = true)]
        tgrid: Vec<f64>,
        #[command(flatten)]
        scan: ScanArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct CharSelector {
    #[arg(long)]
    pub modulus: u64,
    /// Character index k or label q.k
    #[arg(long = "char")]
    pub character: String,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Grid points per unit of log(q(t+2)); at least 4
    #[arg(long, default_value_t = 8.0)]
    pub grid_factor: f64,
    /// Bisection half-width for each zero
    #[arg(long, default_value_t = 1e-9)]
    pub refine_tol: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write CSV to PATH
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Write JSON to PATH, or to stdout when PATH is omitted
    #[arg(long, value_name = "PATH", num_args = 0..=1)]
    pub json: Option<Option<PathBuf>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Hurwitz,
    Afe,
}
