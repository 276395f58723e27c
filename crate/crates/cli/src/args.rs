use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "edet", version, about = "Exact power-sum determinants over commutative, noncommutative and nonassociative rings")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "EDET_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Threads used to split permutations or trials; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub workers: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a determinant formula on a matrix file.
    Det(DetArgs),
    /// Check the vanishing brackets (1) or the singularity criterion (2).
    Check(CheckArgs),
    /// Count ring operations against the predicted schedule.
    Bench(BenchArgs),
    /// Search for a counterexample to a determinant law.
    Search(SearchArgs),
    /// Run a seeded property suite.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long)]
    pub input: PathBuf,

    /// leibniz, b3, b4, b5, sdet or nonassoc.
    #[arg(long, default_value = "b5")]
    pub method: String,

    #[command(flatten)]
    pub gamma: GammaArgs,

    /// Also print an operation-count report as JSON.
    #[arg(long)]
    pub count_ops: bool,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct GammaArgs {
    /// One gamma for every permutation, in the ring's JSON encoding.
    #[arg(long)]
    pub gamma_constant: Option<String>,

    /// Seeded per-permutation gammas (b3 only).
    #[arg(long)]
    pub gamma_seed: Option<u64>,

    /// JSON array of n! gammas indexed by lexicographic permutation rank (b3 only).
    #[arg(long)]
    pub gamma_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub corollary: u8,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "rational")]
    pub ring: String,

    #[arg(long, default_value = "b5")]
    pub method: String,

    #[arg(long, default_value_t = 2)]
    pub from: usize,

    #[arg(long, default_value_t = 7)]
    pub to: usize,

    /// Random matrices per order; counts must agree across them.
    #[arg(long, default_value_t = 3)]
    pub trials: usize,

    /// Allow orders above the cap of 7.
    #[arg(long)]
    pub force: bool,

    /// Write the rows as JSON here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// multiplicativity, laplace or polyadditivity-nonassoc.
    #[arg(long)]
    pub claim: String,

    #[arg(long)]
    pub ring: String,

    #[arg(long)]
    pub n: usize,

    #[arg(long, default_value_t = 1000)]
    pub max_trials: u64,

    /// Also write the result JSON here.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// lemma3, lemma4, lemma6, corollary1 or corollary2.
    #[arg(long)]
    pub suite: String,

    #[arg(long)]
    pub ring: String,

    #[arg(long)]
    pub n: usize,

    #[arg(long, default_value_t = 200)]
    pub trials: u64,

    /// Also write the reports as JSON here.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
