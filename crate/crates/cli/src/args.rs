use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use repstab_core::LambdaSet;

#[derive(Parser, Debug)]
#[command(name = "repstab", version, about = "Cohomology characteristics and representation stability of diagonal arrangement complements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Largest n the lattice oracle will handle.
    #[arg(long, global = true, env = "REPSTAB_ORACLE_LIMIT", default_value_t = repstab_core::oracle::DEFAULT_ORACLE_LIMIT)]
    pub oracle_limit: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characteristic of H̃^i for one n, in the Schur basis.
    Char(CharArgs),
    /// Sharp stability bounds for a range of i.
    Table(TableArgs),
    /// Compare the symmetric-function pipeline with the lattice oracle.
    Verify(VerifyArgs),
    /// Theorem bounds, plus the sharp bound when computable.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Either `--k` or `--lambda`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// k of the k-equal arrangement.
    #[arg(long)]
    pub k: Option<usize>,

    /// Base partitions, e.g. "[2,2];[3]".
    #[arg(long, value_parser = parse_lambda)]
    pub lambda: Option<LambdaSet>,
}

#[derive(Args, Debug)]
pub struct CharArgs {
    #[arg(long)]
    pub d: usize,
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub n: usize,
    /// Use the lattice oracle even when a formula is available.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    /// Single value or inclusive range like 3..6.
    #[arg(long, value_parser = parse_range)]
    pub i: RangeInclusive<usize>,
    /// Stop computing at this n; rows that needed more are marked.
    #[arg(long, value_parser = parse_positive)]
    pub horizon: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub d: usize,
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub n_max: usize,
    /// Restrict to these i (default: every degree that can be nonzero).
    #[arg(long, value_parser = parse_range)]
    pub i: Option<RangeInclusive<usize>>,
    /// Also list cases where both sides vanish.
    #[arg(long)]
    pub include_zero: bool,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub d: usize,
    #[command(flatten)]
    pub target: Target,
    #[arg(long)]
    pub i: usize,
    #[arg(long, value_parser = parse_positive)]
    pub horizon: Option<usize>,
}

fn parse_lambda(s: &str) -> Result<LambdaSet, String> {
    s.parse().map_err(|e: repstab_core::Error| e.to_string())
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// `5`, `3..6` or `3..=6`, all inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), 3..=6);
        assert_eq!(parse_range("3..=6").unwrap(), 3..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
