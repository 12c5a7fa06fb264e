mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "quadfact", version, about = "Degree-two factors of f(X) - g(Y)")]
pub struct Cli {
    /// Field: Q, GF(p), GF(p^k) or GF(p^k;m0,...,mk).
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest field the exhaustive search may enumerate.
    #[arg(long, global = true, env = "QUADFACT_BUDGET")]
    pub budget: Option<u64>,
    /// TOML file with defaults for `field`, `json`, `budget` and `max_pairs`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Dickson polynomial D_n(x, a), or the factors of D_n(x,a) -/+ D_n(y,a).
    Dickson {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        a: String,
        /// Print the factors of D_n(x,a) - D_n(y,a).
        #[arg(long, conflicts_with = "sum")]
        diff: bool,
        /// Print the factors of D_n(x,a) + D_n(y,a).
        #[arg(long)]
        sum: bool,
    },
    /// Degree-two factors of f(x) - g(y) by exhaustive search.
    Factor {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Classify f(x) - g(y) and print a verified certificate.
    Classify {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Build a pair of the given case together with its predicted factors.
    Construct {
        /// Case tag such as T2b-iv or T3a.
        case: String,
        #[command(flatten)]
        params: ConstructArgs,
    },
    /// Decompositions of f, or common decompositions of f and g.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Normal form of a PGL2 element, or of a dihedral pair with --rho.
    #[command(name = "pgl2-normal-form")]
    Pgl2NormalForm {
        /// Matrix entries a b c d.
        #[arg(num_args = 4, required = true, allow_negative_numbers = true)]
        entries: Vec<String>,
        /// Entries of the rotation; the first matrix is then the reflection.
        #[arg(long, num_args = 4, allow_negative_numbers = true)]
        rho: Option<Vec<String>>,
    },
    /// Compare the classifier with the exhaustive search on all monic pairs.
    #[command(name = "verify-theorems")]
    VerifyTheorems {
        #[arg(long, default_value_t = 1)]
        min_deg: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        max_pairs: Option<u64>,
        /// Resume from a cursor printed by an earlier run.
        #[arg(long, default_value_t = 0)]
        start: u64,
    },
    /// Check the Dickson, factor-formula and PGL2 identities.
    #[command(name = "identity-suite")]
    IdentitySuite {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
}

#[derive(Args, Debug, Default)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub u: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    /// Case below the Frobenius steps (T3a).
    #[arg(long)]
    pub inner: Option<String>,
    #[arg(long)]
    pub steps: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
