use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pimtype_core::meataxe::{DEFAULT_BOUND, DEFAULT_SEED};

/// Quadratic type of PIMs in characteristic 2.
#[derive(Debug, Parser)]
#[command(name = "pimtype", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real, strongly real and weakly real classes.
    Reality(RealityArgs),
    /// Quadratic/non-quadratic verdict for every self-dual PIM.
    Classify(ClassifyArgs),
    /// Congruences, Cartan invariants, trivial-PIM and odd-Cartan checks.
    Verify(ClassifyArgs),
    /// Module-theoretic verdicts with three-way agreement.
    Oracle(OracleArgs),
}

#[derive(Clone, Debug, Default, Args)]
pub struct InputArgs {
    /// Bundled (or PIMTYPE_FIXTURE_DIR) fixture name, e.g. `s3`, `2a5`, `mcl`.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Group recipe, e.g. `sym:4`, `sl25`, `semidirect:cyclic:7;cyclic:4;-1`.
    #[arg(long)]
    pub group: Option<String>,
    /// Character table file.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Decomposition matrix file (with `--table`).
    #[arg(long)]
    pub dec: Option<PathBuf>,
    /// Seed for the randomized MeatAxe.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest group order the oracle accepts.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
}

#[derive(Debug, Args)]
pub struct RealityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Compute from both a group and a table and compare.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Use `φ(g) ∈ 2R` instead of `φ(g) ∈ 2𝔸` in the strongly real criterion.
    #[arg(long)]
    pub strict_local: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Run the whole built-in catalog.
    #[arg(long)]
    pub catalog: bool,
}
