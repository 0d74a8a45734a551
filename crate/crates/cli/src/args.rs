//! Command-line definitions.

use std::path::PathBuf;

use chisq_mine::Kind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "chisq-mine",
    version,
    about = "Mine statistically significant substrings with the chi-square statistic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan a string file and print the significant substrings as CSV.
    Scan(ScanArgs),
    /// Generate a synthetic string with its null model and metadata.
    Gen(GenArgs),
    /// Encode a numeric series as an up/down binary string.
    Encode(EncodeArgs),
    /// Measure evaluation counts over generated strings of growing length.
    Bench(BenchArgs),
    /// Convert a chi-square score to a p-value.
    Pvalue(PvalueArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Mss,
    Topt,
    Threshold,
    Minlen,
}

#[derive(Debug, Args)]
pub struct VariantArgs {
    #[arg(long, value_enum, default_value = "mss")]
    pub mode: Mode,
    /// Number of results, `topt` only.
    #[arg(long)]
    pub t: Option<usize>,
    /// Score threshold, `threshold` only.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Substrings must be longer than this, `minlen` only.
    #[arg(long)]
    pub gamma: Option<usize>,
    /// Score every substring instead of skipping.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Model file, or `empirical` to use the symbol frequencies of the input
    /// itself. The empirical null is estimated from the very data it tests.
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub variant: VariantArgs,
    /// Append an instrumentation summary line.
    #[arg(long)]
    pub stats: bool,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[arg(long, default_value = "null", value_parser = parse_kind)]
    pub kind: Kind,
    #[arg(long, default_value = "2")]
    pub k: usize,
    /// Repeat probability, `biased_binary` only.
    #[arg(long)]
    pub p: Option<f64>,
    /// Model file for `null` strings; uniform over `k` symbols when absent.
    #[arg(long)]
    pub model: Option<PathBuf>,
    #[arg(long, default_value = "0")]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,
    #[arg(long, value_parser = parse_size)]
    pub n: usize,
    /// String file to write; `<out>.model` and `<out>.meta.json` are written
    /// next to it.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// Single-column CSV of numbers, optional header line.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,
    #[command(flatten)]
    pub variant: VariantArgs,
    /// Comma-separated string lengths.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "1000,3000,10000,30000,100000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value = "5")]
    pub trials: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PvalueArgs {
    #[arg(long)]
    pub chi2: f64,
    /// Alphabet size; the statistic has `k - 1` degrees of freedom.
    #[arg(long)]
    pub k: usize,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: chisq_mine::Error| e.to_string())
}

/// Accepts plain integers and integral scientific notation such as `1e5`.
fn parse_size(s: &str) -> Result<usize, String> {
    if let Ok(v) = s.trim().parse::<usize>() {
        return Ok(v);
    }
    match s.trim().parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 => Ok(v as usize),
        _ => Err(format!("{s:?} is not a non-negative integer")),
    }
}
