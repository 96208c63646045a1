use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "scldpc",
    version,
    about = "Design and verify LDPC convolutional codes with small constraint length"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form lower bound on L_h for girth 6 or 8
    Bound(BoundArgs),
    /// Convert between .hs, .hx and alist
    Convert(ConvertArgs),
    /// Girth of the code, up to a cap
    Girth(GirthArgs),
    /// Parameters, girth from both routes, and shortest-cycle witnesses
    Verify(GirthArgs),
    /// Search for a syndrome former of minimum memory order
    Search(SearchArgs),
    /// Explicit girth-8 constructions for c = 1, w = 2
    Construct(ConstructArgs),
    /// CSV of bound against exhaustive search over a grid
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(short)]
    pub a: u32,
    #[arg(short)]
    pub c: u32,
    /// Row weight, or a comma-separated list of `a` weights
    #[arg(short, value_delimiter = ',', required = true)]
    pub w: Vec<u32>,
    /// Girth target
    #[arg(short)]
    pub g: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Hs,
    Hx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Hs,
    Hx,
    Alist,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or `-` for standard input
    pub input: PathBuf,
    /// Override header-based format detection
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: Input,
    /// Output format; defaults to the other text format
    #[arg(long, value_enum)]
    pub to: Option<OutputFormat>,
    /// Block columns in the alist window (default m_h + 1)
    #[arg(long)]
    pub blocks: Option<u32>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GirthArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 12)]
    pub cap: u32,
    #[arg(long, env = "SCLDPC_WORKERS", default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProposalArg {
    Uniform,
    Greedy,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short)]
    pub a: u32,
    #[arg(short)]
    pub c: u32,
    /// Row weight, or a comma-separated list of `a` weights
    #[arg(short, value_delimiter = ',', required = true)]
    pub w: Vec<u32>,
    #[arg(short)]
    pub g: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    /// Candidate proposal for random mode
    #[arg(long, value_enum, default_value_t = ProposalArg::Uniform)]
    pub proposal: ProposalArg,
    #[arg(long)]
    pub lh_min: Option<u32>,
    #[arg(long)]
    pub lh_max: Option<u32>,
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, env = "SCLDPC_WORKERS", default_value_t = 1)]
    pub workers: usize,
    /// Random mode: checkpoint interval in candidates
    #[arg(long, default_value_t = 10_000)]
    pub checkpoint_every: u64,
    /// Where to write the `.hs` result (default standard output)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// JSON-lines progress log
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Prop1,
    Prop2,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub which: Construction,
    #[arg(short)]
    pub a: u32,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(short)]
    pub w: u32,
    #[arg(short)]
    pub g: u32,
    /// Values of c
    #[arg(short, value_delimiter = ',', required = true)]
    pub c: Vec<u32>,
    /// Inclusive range of a, as `lo..hi`
    #[arg(short, value_parser = parse_range)]
    pub a: RangeInclusive<u32>,
    /// Candidate budget per cell
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, env = "SCLDPC_WORKERS", default_value_t = 1)]
    pub workers: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `lo..hi`, got `{s}`"))?;
    let lo = lo.trim().parse::<u32>().map_err(|e| format!("{lo}: {e}"))?;
    let hi = hi.trim().parse::<u32>().map_err(|e| format!("{hi}: {e}"))?;
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..8"), Ok(2..=8));
        assert!(parse_range("5..4").unwrap().is_empty());
        assert!(parse_range("2-8").is_err());
    }

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
