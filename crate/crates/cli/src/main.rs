use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kr_decomp::growth::{GrowthMode, DEFAULT_SEARCH_BUDGET};
use kr_decomp::oracle::DEFAULT_ORACLE_LIMIT;
use kr_decomp::tree::DEFAULT_NODE_LIMIT;
use kr_decomp_cli::commands::{self, Outcome};
use kr_decomp_cli::render::Format;

#[derive(Parser)]
#[command(name = "krdecomp", version, about = "Decompositions of Kirillov-Reshetikhin modules W_m(ℓ)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition tree of W_m(ℓ).
    Decompose {
        algebra: String,
        ell: usize,
        m: u32,
        #[arg(long, value_enum, default_value = "tree")]
        format: Format,
        /// Append the dimension of every summand and the total.
        #[arg(long)]
        dims: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
    /// Compare the tree with the brute-force multiplicity formula.
    Verify {
        algebra: String,
        ell: usize,
        m: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: u64,
    },
    /// Growth degree of dim W_m(ℓ) in m.
    Growth {
        algebra: String,
        ell: usize,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: usize,
    },
    /// Check stored decomposition tables against freshly built trees.
    Fixtures {
        /// Restrict to these algebras.
        #[arg(conflicts_with = "all")]
        algebras: Vec<String>,
        /// Run every fixture (the default when no algebra is given).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))]
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Search,
    Fixture,
}

impl From<Mode> for GrowthMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Auto => GrowthMode::Auto,
            Mode::Search => GrowthMode::Search,
            Mode::Fixture => GrowthMode::Fixture,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome: Outcome = match cli.command {
        Command::Decompose { algebra, ell, m, format, dims, node_limit } => {
            commands::decompose(&algebra, ell, m, format, dims, node_limit)
        }
        Command::Verify { algebra, ell, m, node_limit, oracle_limit } => {
            commands::verify(&algebra, ell, m, node_limit, oracle_limit)
        }
        Command::Growth { algebra, ell, mode, budget } => commands::growth(&algebra, ell, mode.into(), budget),
        Command::Fixtures { algebras, all: _, dir, node_limit } => commands::fixtures(&dir, &algebras, node_limit),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
