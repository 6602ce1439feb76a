//! Command-line front end for `wbanzhaf`.
//!
//! ```text
//! wbanzhaf index  --game FILE --family NAME [--p SPEC] [--max-order INT | --coalition LIST] [--format json|csv]
//! wbanzhaf approx --game FILE --p SPEC --k INT [--out FILE]
//! wbanzhaf verify --game FILE --p SPEC [--seed INT]
//! ```
//!
//! Exit codes: 0 success, 2 malformed input, 3 profile, coalition or degree
//! mismatch, 4 I/O failure, 5 failed verification.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod approx;
pub mod document;
pub mod error;
pub mod index;
pub mod number;
pub mod verify;

pub use document::GameDocument;
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "wbanzhaf", version, about = "Weighted Banzhaf indexes and least-squares approximations of cooperative games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print interaction indexes, one row per coalition in mask order.
    Index {
        /// Game file (JSON).
        #[arg(long)]
        game: PathBuf,
        #[arg(long, value_enum)]
        family: index::Family,
        /// Profile: one probability for all players, or a comma-separated list.
        /// Used by the weighted-banzhaf family only.
        #[arg(long)]
        p: Option<String>,
        /// Largest coalition size to print (default: all).
        #[arg(long, conflicts_with = "coalition")]
        max_order: Option<usize>,
        /// A single coalition, e.g. "2,3"; "" is the empty coalition.
        #[arg(long)]
        coalition: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: index::Format,
    },
    /// Best degree-k weighted approximation as a Möbius game file.
    Approx {
        #[arg(long)]
        game: PathBuf,
        /// Strict profile: every probability inside (0, 1).
        #[arg(long)]
        p: String,
        #[arg(long)]
        k: usize,
        /// Where to write the approximation; printed inline when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every identity on the game and on seeded random games.
    Verify {
        #[arg(long)]
        game: PathBuf,
        /// Strict profile: every probability inside (0, 1).
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs a parsed command and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Index {
            game,
            family,
            p,
            max_order,
            coalition,
            format,
        } => {
            let document = GameDocument::load(game)?;
            index::run(&index::IndexArgs {
                document: &document,
                family: *family,
                profile: p.as_deref(),
                max_order: *max_order,
                coalition: coalition.as_deref(),
                format: *format,
            })
        }
        Command::Approx { game, p, k, out } => {
            let document = GameDocument::load(game)?;
            approx::run(&approx::ApproxArgs {
                document: &document,
                profile: p,
                k: *k,
                out: out.as_deref(),
            })
        }
        Command::Verify { game, p, seed } => {
            let document = GameDocument::load(game)?;
            verify::run(&verify::VerifyArgs {
                document: &document,
                profile: p,
                seed: *seed,
            })
        }
    }
}
